#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "vdl/js/parser.hpp"
#include "vdl/js/printer.hpp"
#include "vdl/obf/obfuscate.hpp"
#include "vdl/scan/rules.hpp"
#include "vdl/scan/scan.hpp"

using namespace vdl;
using namespace vdl::scan;

namespace {

const Rule& rule(const std::string& id) {
  static const auto rules = default_ruleset();
  auto it = std::find_if(rules.begin(), rules.end(), [&](const Rule& r) { return r.id == id; });
  REQUIRE(it != rules.end());
  return *it;
}

std::vector<int> lines_of(const std::vector<Finding>& fs) {
  std::vector<int> out;
  for (const auto& f : fs) out.push_back(f.line());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> pattern_lines(const std::string& id, const std::string& src) {
  return lines_of(match_pattern(rule(id), *js::parse_source(src)));
}

std::vector<int> taint_lines(const std::string& id, const std::string& src) {
  return lines_of(taint_program(rule(id), *js::parse_source(src)));
}

}  // namespace

TEST_CASE("severities and filters") {
  CHECK(parse_severity("High") == Severity::High);
  CHECK_FALSE(parse_severity("high").has_value());
  CHECK_FALSE(parse_severity("Severe").has_value());
  CHECK(project_level(Severity::Low) == Level::Warning);
  CHECK(project_level(Severity::Medium) == Level::Warning);
  CHECK(project_level(Severity::High) == Level::Error);
  CHECK(project_level(Severity::Critical) == Level::Error);
  auto filters = all_severity_filters();
  REQUIRE(filters.size() == 6);
  std::vector<std::string> names;
  for (const auto& f : filters) {
    names.push_back(f.name());
    CHECK(SeverityFilter::parse(f.name()) == f);
  }
  CHECK(names == std::vector<std::string>{"Low", "Medium", "High", "Critical", "Warning", "Error"});
  CHECK(SeverityFilter::of(Level::Error).accepts(Severity::Critical));
  CHECK_FALSE(SeverityFilter::of(Level::Error).accepts(Severity::Medium));
  CHECK(SeverityFilter::of(Severity::Medium).accepts(Severity::Medium));
  CHECK_FALSE(SeverityFilter::of(Severity::Medium).accepts(Severity::High));
}

TEST_CASE("default ruleset") {
  auto rules = default_ruleset();
  CHECK(rules.size() == 8);
  CHECK_NOTHROW(validate_ruleset(rules));
  int taint = 0;
  for (const auto& r : rules) taint += r.kind == RuleKind::Taint ? 1 : 0;
  CHECK(taint == 3);
  CHECK(rule("js-eval-usage").severity == Severity::High);
  CHECK(rule("js-sqli-taint").severity == Severity::Critical);
  CHECK(rule("js-document-write").severity == Severity::Low);
  CHECK(rule("js-innerhtml-assign").severity == Severity::Medium);
}

TEST_CASE("ruleset json") {
  const char* text = R"({"rules": [
    {"id": "x-eval", "kind": "pattern", "severity": "High", "description": "d",
     "pattern": {"kind": "callee", "names": ["eval"]}},
    {"id": "x-taint", "kind": "taint", "severity": "Critical",
     "taint": {"sources": ["req.query.*"], "sinks": [{"callee": "run", "arg": 0}], "sanitizers": ["clean"]}}
  ]})";
  auto rules = parse_ruleset(text);
  REQUIRE(rules.size() == 2);
  CHECK(rules[0].pattern.names == std::vector<std::string>{"eval"});
  CHECK(rules[1].taint.sinks[0].callee == "run");
  auto report = scan::scan(*js::parse_source("function h(req) { var q = req.query.a; run(q); }\neval(\"1\");"), rules);
  CHECK(report.size() == 2);
  CHECK_THROWS_AS(parse_ruleset("{\"rules\": [{\"id\": \"a\", \"kind\": \"bogus\", \"severity\": \"Low\"}]}"),
                  RulesetError);
  CHECK_THROWS_AS(parse_ruleset("{\"rules\": [{\"id\": \"a\", \"kind\": \"pattern\", \"severity\": \"low\"}]}"),
                  RulesetError);
  CHECK_THROWS_AS(parse_ruleset("not json"), RulesetError);
  auto dup = default_ruleset();
  dup.push_back(dup.front());
  CHECK_THROWS_AS(validate_ruleset(dup), RulesetError);
  auto empty = default_ruleset();
  for (auto& r : empty)
    if (r.kind == RuleKind::Taint) r.taint.sinks.clear();
  CHECK_THROWS_AS(validate_ruleset(empty), RulesetError);
}

TEST_CASE("member paths") {
  auto p = js::parse_source("a.b[\"c\"].d; a[i].b; f().x;");
  CHECK(join_path(*member_path(*p->kids[0]->kids[0])) == "a.b.c.d");
  CHECK_FALSE(member_path(*p->kids[1]->kids[0]).has_value());
  CHECK_FALSE(member_path(*p->kids[2]->kids[0]).has_value());
  auto q = js::parse_source("db.query(1); x.db.query(2); query(3);");
  CHECK(callee_matches(*q->kids[0]->kids[0]->kids[0], "db.query"));
  CHECK_FALSE(callee_matches(*q->kids[1]->kids[0]->kids[0], "db.query"));
  CHECK(callee_matches(*q->kids[1]->kids[0]->kids[0], "query"));
  CHECK(callee_matches(*q->kids[2]->kids[0]->kids[0], "query"));
}

TEST_CASE("eval and Function patterns") {
  CHECK(pattern_lines("js-eval-usage", "eval(x);\nwindow.eval(y);\nvar evaluate = 1;\nevaluate2(z);") ==
        std::vector<int>{1, 2});
  CHECK(pattern_lines("js-new-function", "new Function(\"a\", b);\nFunction(c);\nnew Foo();") ==
        std::vector<int>{1, 2});
}

TEST_CASE("innerHTML and document.write patterns") {
  CHECK(pattern_lines("js-innerhtml-assign", "el.innerHTML = x;\nel.innerHTML = \"<b>\" + \"c\";\nel[\"innerHTML\"] = y;\nel.innerText = z;") ==
        std::vector<int>{1, 3});
  CHECK(pattern_lines("js-document-write", "document.write(a);\nwrite(b);\ndocument.writeln(c);") ==
        std::vector<int>{1});
}

TEST_CASE("hardcoded secret heuristics") {
  const char* src =
      "var a = \"password=hunter22x\";\n"
      "var apiKeyValue = \"api-key:abcdefgh\";\n"
      "var authToken = \"QWxhZGRpbjpvcGVuc2VzYW1lMTIz\";\n"
      "var title = \"QWxhZGRpbjpvcGVuc2VzYW1lMTIz\";\n"
      "var secret = \"short\";\n"
      "var note = \"password reset link\";\n"
      "x = \"password=hunter22x\";\n";
  CHECK(pattern_lines("js-hardcoded-secret", src) == std::vector<int>{1, 2, 3});
}

TEST_CASE("taint flows in source order") {
  CHECK(taint_lines("js-sqli-taint", "function h(req) {\nvar id = req.query.id;\ndb.query(\"x\" + id);\n}") ==
        std::vector<int>{3});
  // sink before the tainted assignment
  CHECK(taint_lines("js-sqli-taint", "function h(req) {\nvar id;\ndb.query(\"x\" + id);\nid = req.query.id;\n}").empty());
  // taint propagates through copies and compound assignment
  CHECK(taint_lines("js-cmdi-taint", "function h(req) {\nvar a = req.params.p;\nvar b = \"ls \";\nb += a;\nexec(b);\n}") ==
        std::vector<int>{5});
  // reassignment with a clean value clears taint
  CHECK(taint_lines("js-cmdi-taint", "function h(req) {\nvar a = req.params.p;\na = \"safe\";\nexec(a);\n}").empty());
}

TEST_CASE("taint stops at sanitizers, calls and computed indexes") {
  CHECK(taint_lines("js-xss-taint", "function h(req) {\nvar n = escapeHtml(req.query.n);\nres.send(n);\n}").empty());
  CHECK(taint_lines("js-sqli-taint", "function h(req) {\nvar n = sanitize(req.query.n);\ndb.query(n);\n}").empty());
  CHECK(taint_lines("js-sqli-taint", "function h(req) {\nvar n = wrap(req.query.n);\ndb.query(n);\n}").empty());
  CHECK(taint_lines("js-sqli-taint", "function h(req, k) {\nvar n = req.query[k];\ndb.query(n);\n}").empty());
  CHECK(taint_lines("js-sqli-taint", "function h(req) {\nvar n = req[\"query\"].id;\ndb.query(n);\n}") ==
        std::vector<int>{3});
}

TEST_CASE("taint only inspects the designated argument") {
  CHECK(taint_lines("js-sqli-taint", "function h(req) {\nvar v = req.body.v;\ndb.query(\"select 1\", v);\n}").empty());
  CHECK(taint_lines("js-sqli-taint", "function h(req) {\nvar v = req.body.v;\ndb.run(v);\n}") == std::vector<int>{3});
}

TEST_CASE("taint paths record source and sink") {
  auto fs = taint_program(rule("js-xss-taint"), *js::parse_source("function h(req) {\nvar a = req.query.a;\nvar b = a;\nres.send(b);\n}"));
  REQUIRE(fs.size() == 1);
  REQUIRE(fs[0].taint_path.has_value());
  CHECK(fs[0].taint_path->front().start_line == 2);
  CHECK(fs[0].taint_path->back().start_line == 4);
}

TEST_CASE("functions are analysed independently") {
  const char* src =
      "var id = 1;\n"
      "function a(req) { id = req.query.id; }\n"
      "function b() { db.query(id); }\n"
      "function c(req) { var x = req.query.x; function inner() { db.query(x); } db.query(x); }\n";
  CHECK(taint_lines("js-sqli-taint", src) == std::vector<int>{4});
}

TEST_CASE("scan report ordering and tallies") {
  auto rules = default_ruleset();
  auto report = scan::scan(*js::parse_source("eval(b);\neval(a);\ndocument.write(c);\nel.innerHTML = d;"), rules, "f.js");
  REQUIRE(report.size() == 4);
  CHECK(std::is_sorted(report.findings.begin(), report.findings.end(), finding_less));
  CHECK(report.rule_counts["js-eval-usage"] == 2);
  CHECK(report.severity_counts[Severity::High] == 2);
  CHECK(report.findings[0].file == "f.js");
  auto low = report.filtered(SeverityFilter::of(Severity::Low));
  CHECK(low.size() == 1);
  CHECK(low.rule_counts.size() == 1);
  auto warn = report.filtered(SeverityFilter::of(Level::Warning));
  CHECK(warn.size() == 2);
}

TEST_CASE("control flow graph") {
  auto p = js::parse_source("function f(x) { var a = 1; if (x) { a = 2; } else { a = 3; } return a; }");
  auto cfg = build_cfg(*p->kids[0]);
  CHECK(cfg.block_count() >= 4);
  auto reach = cfg.reachable();
  CHECK(reach[Cfg::kExit]);
  CHECK_FALSE(cfg.successors(Cfg::kEntry).empty());

  auto loop = js::parse_source("function g(n) { while (n > 0) { n = n - 1; } return n; }");
  auto lc = build_cfg(*loop->kids[0]);
  bool back_edge = false;
  for (auto [from, to] : lc.edges) back_edge = back_edge || (from > to && to > Cfg::kExit);
  CHECK(back_edge);

  auto dead = js::parse_source("function h() { return 1; print(2); }");
  auto dc = build_cfg(*dead->kids[0]);
  auto dr = dc.reachable();
  CHECK(std::count(dr.begin(), dr.end(), false) >= 1);
}

TEST_CASE("corpus: eval findings survive layout, debug and dead-code passes") {
  auto rules = default_ruleset();
  int fixtures_with_eval = 0;
  for (const auto& c : test::corpus_programs()) {
    auto base = match_pattern(rule("js-eval-usage"), *c.program);
    if (base.empty()) continue;
    ++fixtures_with_eval;
    CAPTURE(c.name);
    for (auto t : {obf::Technique::CMP, obf::Technique::SIMP, obf::Technique::DP, obf::Technique::DCI}) {
      obf::ObfuscationConfig cfg;
      cfg.techniques = {t};
      cfg.seed = 1;
      auto v = js::parse_source(js::print_program(*obf::apply(*c.program, cfg)));
      CHECK(match_pattern(rule("js-eval-usage"), *v).size() == base.size());
    }
  }
  CHECK(fixtures_with_eval >= 5);
}

TEST_CASE("corpus: all eight techniques erase every taint finding") {
  int taint_fixtures = 0;
  for (const auto& c : test::corpus_programs()) {
    std::size_t base = 0;
    for (const auto* id : {"js-sqli-taint", "js-cmdi-taint", "js-xss-taint"})
      base += taint_program(rule(id), *c.program).size();
    if (base == 0) continue;
    ++taint_fixtures;
    CAPTURE(c.name);
    obf::ObfuscationConfig cfg;
    cfg.techniques = obf::all_techniques();
    cfg.seed = 1;
    auto v = js::parse_source(js::print_program(*obf::apply(*c.program, cfg)));
    for (const auto* id : {"js-sqli-taint", "js-cmdi-taint", "js-xss-taint"})
      CHECK(taint_program(rule(id), *v).empty());
  }
  CHECK(taint_fixtures >= 10);
}

TEST_CASE("corpus: scans are deterministic and tallies exact") {
  auto rules = default_ruleset();
  for (const auto& c : test::corpus_programs()) {
    CAPTURE(c.name);
    auto a = scan::scan(*c.program, rules, "index.js");
    auto b = scan::scan(*js::parse_source(c.source), rules, "index.js");
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a.findings[i].rule_id == b.findings[i].rule_id);
      CHECK(a.findings[i].span == b.findings[i].span);
    }
    int by_rule = 0, by_sev = 0;
    for (const auto& [k, n] : a.rule_counts) by_rule += n;
    for (const auto& [k, n] : a.severity_counts) by_sev += n;
    CHECK(by_rule == static_cast<int>(a.size()));
    CHECK(by_sev == static_cast<int>(a.size()));
  }
}
