#include <doctest.h>
#include <json.hpp>

#include "support.hpp"
#include "vdl/js/interp.hpp"
#include "vdl/js/lexer.hpp"
#include "vdl/js/parser.hpp"
#include "vdl/js/printer.hpp"
#include "vdl/js/unicode.hpp"

using namespace vdl::js;

namespace {

std::vector<std::string> run_lines(const std::string& src, std::uint64_t seed = 0) {
  auto p = parse_source(src);
  EvalOptions o;
  o.seed = seed;
  return evaluate(*p, o).output;
}

}  // namespace

TEST_CASE("interpreter output agrees with a reference engine") {
  auto cases = nlohmann::json::parse(vdl::test::slurp(vdl::test::golden("interp_cases.json")));
  REQUIRE(cases.size() >= 10);
  for (const auto& c : cases) {
    const std::string src = c["source"];
    CAPTURE(src);
    CHECK(run_lines(src) == c["output"].get<std::vector<std::string>>());
  }
}

TEST_CASE("trace result is the last top-level expression or main()") {
  auto t = evaluate(*parse_source("var x = 1; x + 1;"));
  CHECK(t.result == "2");
  t = evaluate(*parse_source("function main() { return [1, \"a\"]; } 5;"));
  CHECK(t.result == "[1,\"a\"]");
  t = evaluate(*parse_source("var y = 3;"));
  CHECK(t.result == "undefined");
}

TEST_CASE("step budget halts runaway loops") {
  EvalOptions o;
  o.budget = 1000;
  auto t = evaluate(*parse_source("print(1); while (true) { }"), o);
  CHECK(t.halted);
  CHECK(t.output == std::vector<std::string>{"1"});
}

TEST_CASE("runtime errors") {
  CHECK_THROWS_AS(evaluate(*parse_source("print(nope);")), RuntimeError);
  CHECK_THROWS_AS(evaluate(*parse_source("var u; u.x;")), RuntimeError);
  CHECK_THROWS_AS(evaluate(*parse_source("var n = 1; n();")), RuntimeError);
  CHECK_THROWS_AS(evaluate(*parse_source("const c = 1; c = 2;")), RuntimeError);
  CHECK_THROWS_AS(evaluate(*parse_source("function r() { return r(); } r();")), RuntimeError);
}

TEST_CASE("rand is driven by the seed") {
  const std::string src = "print(rand(), rand());";
  CHECK(run_lines(src, 4) == run_lines(src, 4));
  CHECK(run_lines(src, 4) != run_lines(src, 5));
}

TEST_CASE("selfText reflects the printed program") {
  auto p = parse_source("var s = selfText(); print(s.length > 0);");
  CHECK(evaluate(*p).output == std::vector<std::string>{"true"});
  EvalOptions o;
  o.self_text = "abc";
  CHECK(evaluate(*parse_source("print(selfText());"), o).output == std::vector<std::string>{"abc"});
}

TEST_CASE("lexer") {
  auto toks = tokenize("var a = 'x' + 12.5;");
  REQUIRE(toks.size() == 8);
  CHECK(toks[0].kind == TokenKind::Keyword);
  CHECK(toks[1].kind == TokenKind::Identifier);
  CHECK(toks[3].kind == TokenKind::String);
  CHECK(toks[5].kind == TokenKind::Number);
  CHECK(toks.back().kind == TokenKind::End);
  CHECK(toks[1].span.start_line == 1);
  CHECK_THROWS_AS(tokenize("var s = \"open"), LexError);
  CHECK_THROWS_AS(tokenize("a # b"), LexError);
}

TEST_CASE("parser rejects constructs outside the subset") {
  CHECK_THROWS_AS(parse_source("var a = 1"), ParseError);
  CHECK_THROWS_AS(parse_source("a++;"), SourceError);
  CHECK_THROWS_AS(parse_source("var r = /ab/;"), SourceError);
  CHECK_THROWS_AS(parse_source("break;"), SourceError);
  try {
    parse_source("if (x { }");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.span().start_line == 1);
    CHECK_FALSE(e.expected().empty());
  }
}

TEST_CASE("precedence survives printing") {
  auto p = parse_source("var v = (1 + 2) * 3 - -4 / (5 % 2);");
  auto text = print_compact(*p);
  CHECK(evaluate(*parse_source(text + "print(v);")).output == std::vector<std::string>{"13"});
  CHECK(structural_eq(*p, *parse_source(print_pretty(*p))));
}

TEST_CASE("structural equality ignores layout") {
  CHECK(structural_eq(*parse_source("var a=1;f(a,2);"), *parse_source("var   a = 1 ;\n f( a , 2 ) ;")));
  CHECK_FALSE(structural_eq(*parse_source("var a = 1;"), *parse_source("var a = 2;")));
  CHECK_FALSE(structural_eq(*parse_source("a.b;"), *parse_source("a[\"b\"];")));
}

TEST_CASE("pretty and compact printing round-trip") {
  auto cases = nlohmann::json::parse(vdl::test::slurp(vdl::test::golden("interp_cases.json")));
  for (const auto& c : cases) {
    auto p = parse_source(c["source"].get<std::string>());
    CHECK(structural_eq(*p, *parse_source(print_pretty(*p))));
    auto compact = print_compact(*p);
    CHECK(compact.find('\n') == std::string::npos);
    CHECK(structural_eq(*p, *parse_source(compact)));
  }
}

TEST_CASE("number formatting") {
  CHECK(number_to_string(0.1 + 0.2) == "0.30000000000000004");
  CHECK(number_to_string(1e21) == "1e+21");
  CHECK(number_to_string(1e20) == "100000000000000000000");
  CHECK(number_to_string(1e-7) == "1e-7");
  CHECK(number_to_string(0.000001) == "0.000001");
  CHECK(number_to_string(-0.0) == "0");
  CHECK(number_to_string(1.5) == "1.5");
  CHECK(number_to_string(-42) == "-42");
  CHECK(number_to_string(5e-324) == "5e-324");
  CHECK(number_to_string(std::numeric_limits<double>::quiet_NaN()) == "NaN");
  CHECK(number_to_string(-std::numeric_limits<double>::infinity()) == "-Infinity");
}

TEST_CASE("string quoting round-trips through the parser") {
  for (std::string s : {std::string("plain"), std::string("q\"uo'te"), std::string("line\nbreak\t\\"),
                        std::string("caf\xC3\xA9 \xF0\x9F\x98\x80")}) {
    auto p = parse_source("var s = " + quote_string(s) + ";");
    CHECK(p->kids[0]->kids[0]->kids[0]->text == s);
  }
}

TEST_CASE("utf-16 helpers") {
  CHECK(utf16_length("\xF0\x9F\x98\x80") == 2);
  CHECK(utf16_length("abc") == 3);
  const std::string s = "x\xC3\xA9\xF0\x9F\x98\x80";
  CHECK(utf16_to_utf8(utf8_to_utf16(s)) == s);
  auto lone = parse_source("var s = \"\\uD800\";");
  const std::string& t = lone->kids[0]->kids[0]->kids[0]->text;
  CHECK(utf8_to_utf16(t) == std::u16string(1, u'\xD800'));
}

TEST_CASE("corpus: printing and evaluation are deterministic") {
  for (const auto& c : vdl::test::corpus_programs()) {
    CAPTURE(c.name);
    auto again = parse_source(c.source);
    CHECK(print_pretty(*c.program) == print_pretty(*again));
    CHECK(print_compact(*c.program) == print_compact(*again));
    EvalOptions o;
    o.seed = 11;
    auto a = evaluate(*c.program, o);
    auto b = evaluate(*again, o);
    CHECK(a == b);
    CHECK(a.steps == b.steps);
    CHECK_FALSE(a.halted);
  }
}

TEST_CASE("corpus: every span encloses its children") {
  for (const auto& c : vdl::test::corpus_programs()) {
    CAPTURE(c.name);
    std::size_t violations = 0;
    walk(*c.program, [&](const Node& n) {
      for (const auto& k : n.kids)
        if (k && !n.span.encloses(k->span)) ++violations;
      return true;
    });
    CHECK(violations == 0);
  }
}
