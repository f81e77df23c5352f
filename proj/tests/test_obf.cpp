#include <doctest.h>

#include <algorithm>
#include <set>

#include "vdl/js/interp.hpp"
#include "vdl/js/parser.hpp"
#include "vdl/js/printer.hpp"
#include "vdl/obf/names.hpp"
#include "vdl/obf/obfuscate.hpp"
#include "vdl/scan/scan.hpp"
#include "support.hpp"

using namespace vdl;
using namespace vdl::obf;
using js::NodeKind;

namespace {

const char* kProgram = R"(
function greet(name) {
  var prefix = "Hello, ";
  var suffix = "!";
  if (name === "") {
    name = "stranger";
  } else {
    name = name + " the great";
  }
  return prefix + name + suffix;
}
var total = 0;
for (var i = 0; i < 5; i += 1) {
  total += i * 2;
}
var label = total > 10 ? "large" : "small";
print(greet("Ada"), total, label);
print(greet(""));
)";

int count(const js::Node& root, NodeKind k) {
  int n = 0;
  js::walk(root, [&](const js::Node& x) {
    if (x.is(k)) ++n;
    return true;
  });
  return n;
}

js::Trace run(const js::Node& p) { return js::evaluate(*js::parse_source(js::print_program(p))); }

ObfuscationConfig config(std::initializer_list<Technique> ts, std::uint64_t seed = 1) {
  ObfuscationConfig c;
  c.techniques = TechniqueSet(ts);
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("technique catalogue") {
  CHECK(kAllTechniques.size() == 8);
  std::set<std::string_view> names;
  for (Technique t : kAllTechniques) {
    names.insert(acronym(t));
    CHECK(parse_technique(acronym(t)) == t);
  }
  CHECK(names.size() == 8);
  CHECK_FALSE(parse_technique("cff").has_value());
  CHECK(category(Technique::CMP) == Category::Layout);
  CHECK(category(Technique::SIMP) == Category::Layout);
  CHECK(category(Technique::CFF) == Category::Control);
  CHECK(category(Technique::DCI) == Category::Control);
  CHECK(category(Technique::DP) == Category::Preventive);
  CHECK(category(Technique::SD) == Category::Preventive);
  CHECK(category(Technique::SA) == Category::Data);
  CHECK(category(Technique::SS) == Category::Data);
  CHECK(kPipelineOrder.front() == Technique::SIMP);
  CHECK(kPipelineOrder.back() == Technique::CMP);
}

TEST_CASE("configuration labels and the implied compact pass") {
  auto c = config({Technique::SS, Technique::CFF, Technique::SA}, 7);
  CHECK(c.label() == "CFF+SA+SS_s7");
  CHECK(c.plugin_count() == 3);
  auto sd = config({Technique::SD});
  CHECK(sd.plugin_count() == 2);
  CHECK(sd.effective().count(Technique::CMP) == 1);
  CHECK(config({Technique::SD, Technique::CMP}).plugin_count() == 2);
  CHECK(config({}, 3).label() == "baseline_s3");
}

TEST_CASE("enumeration") {
  auto all = all_techniques();
  CHECK(enumerate_configs(all, EnumerationMode::Singles, 0, 1).size() == 8);
  auto every = enumerate_configs(all, EnumerationMode::AllCombinations, 0, 1);
  CHECK(every.size() == 255);
  std::set<std::string> labels;
  for (const auto& c : every) labels.insert(c.label());
  CHECK(labels.size() == 255);
  const int binom[] = {0, 8, 28, 56, 70, 56, 28, 8, 1};
  for (int k = 1; k <= 8; ++k) {
    auto ks = enumerate_configs(all, EnumerationMode::ByCount, k, 1);
    CHECK(ks.size() == static_cast<std::size_t>(binom[k]));
    for (const auto& c : ks) CHECK(c.techniques.size() == static_cast<std::size_t>(k));
  }
  CHECK(every.front().acronyms() == "CFF");
  CHECK(every[1].acronyms() == "CFF+CMP");
  CHECK(every.back().acronyms() == "SS");
  CHECK_THROWS_AS(enumerate_configs(all, EnumerationMode::ByCount, 0, 1), InvalidMode);
  CHECK_THROWS_AS(enumerate_configs(all, EnumerationMode::ByCount, 9, 1), InvalidMode);
}

TEST_CASE("parameter validation") {
  ObfuscationParams p;
  CHECK_NOTHROW(p.validate());
  p.ss_chunk_len = 0;
  CHECK_THROWS(p.validate());
  p = {};
  p.dci_ratio = 1.5;
  CHECK_THROWS(p.validate());
  p = {};
  p.cff_min_stmts = 0;
  CHECK_THROWS(p.validate());
  p = {};
  p.sa_index_shift = -1;
  CHECK_THROWS(p.validate());
  auto c = config({Technique::CMP});
  c.params.ss_chunk_len = -2;
  CHECK_THROWS(apply(*js::parse_source("var a = 1;"), c));
}

TEST_CASE("rng streams") {
  Rng a(42), b(42), c(43);
  std::vector<std::uint64_t> xa, xb, xc;
  for (int i = 0; i < 8; ++i) {
    xa.push_back(a.next());
    xb.push_back(b.next());
    xc.push_back(c.next());
  }
  CHECK(xa == xb);
  CHECK(xa != xc);
  Rng r(7);
  for (int i = 0; i < 1000; ++i) {
    CHECK(r.below(10) < 10);
    auto v = r.range(-3, 3);
    CHECK((v >= -3 && v <= 3));
    double u = r.unit();
    CHECK((u >= 0.0 && u < 1.0));
  }
  std::vector<int> v{1, 2, 3, 4, 5, 6};
  r.shuffle(v);
  auto sorted = v;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{1, 2, 3, 4, 5, 6});
  std::set<std::uint64_t> seeds;
  for (int t = 0; t < 8; ++t) seeds.insert(derive_seed(1, t));
  CHECK(seeds.size() == 8);
}

TEST_CASE("fresh names avoid existing identifiers") {
  auto p = js::parse_source("var _0x0001 = 1; function f(a) { return a; }");
  Rng r(1);
  NameGen gen(*p, r);
  std::set<std::string> seen{"_0x0001", "f", "a"};
  for (int i = 0; i < 200; ++i) {
    auto n = gen.fresh();
    CHECK(n.rfind("_0x", 0) == 0);
    CHECK(seen.insert(n).second);
  }
}

TEST_CASE("every single technique except self-defending preserves behaviour") {
  auto p = js::parse_source(kProgram);
  auto base = js::evaluate(*p);
  for (Technique t : kAllTechniques) {
    if (t == Technique::SD) continue;
    CAPTURE(acronym(t));
    for (std::uint64_t seed : {1, 2, 3}) {
      auto out = apply(*p, config({t}, seed));
      CHECK(run(*out) == base);
    }
  }
}

TEST_CASE("apply is deterministic per seed") {
  auto p = js::parse_source(kProgram);
  auto c = config({Technique::CFF, Technique::SA, Technique::DCI}, 9);
  CHECK(js::print_program(*apply(*p, c)) == js::print_program(*apply(*p, c)));
  auto other = config({Technique::CFF, Technique::SA, Technique::DCI}, 10);
  CHECK(js::print_program(*apply(*p, c)) != js::print_program(*apply(*p, other)));
}

TEST_CASE("compact output is a single line") {
  auto out = apply(*js::parse_source(kProgram), config({Technique::CMP}));
  CHECK(out->compact);
  auto text = js::print_program(*out);
  CHECK(std::count(text.begin(), text.end(), '\n') <= 1);
}

TEST_CASE("flattening builds a dispatcher and never keeps source order") {
  auto p = js::parse_source("function f() { var a = 1; var b = a + 1; print(a, b); print(b - a); } f();");
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng r(seed);
    auto out = tf_flatten(*p, r);
    CHECK(count(*out, NodeKind::While) == 1);
    CHECK(count(*out, NodeKind::Switch) == 1);
    CHECK(count(*out, NodeKind::Case) == 4);
    CHECK(run(*out) == js::evaluate(*p));
    // follow the dispatch chain and compare execution order with case layout
    const js::Node* body = out->kids[0]->kids[0].get();
    const js::Node* sw = nullptr;
    double state = 0;
    for (const auto& st : body->kids) {
      if (st->is(NodeKind::VarDecl) && !st->kids[0]->kids.empty() && st->kids[0]->kids[0]->is_number())
        state = st->kids[0]->kids[0]->number;
      if (st->is(NodeKind::While)) sw = st->kids[1]->kids[0].get();
    }
    REQUIRE(sw);
    std::vector<std::size_t> layout_positions;
    for (std::size_t step = 0; step + 1 < sw->kids.size(); ++step) {
      for (std::size_t i = 1; i < sw->kids.size(); ++i) {
        const js::Node& c = *sw->kids[i];
        if (c.kids[0]->number != state) continue;
        layout_positions.push_back(i);
        state = c.kids[c.kids.size() - 2]->kids[0]->kids[1]->number;
        break;
      }
    }
    REQUIRE(layout_positions.size() == 4);
    CHECK_FALSE(std::is_sorted(layout_positions.begin(), layout_positions.end()));
  }
}

TEST_CASE("flattening respects the minimum statement count") {
  auto p = js::parse_source("function f() { print(1); print(2); } f();");
  ObfuscationParams params;
  params.cff_min_stmts = 3;
  Rng r(1);
  CHECK(js::structural_eq(*tf_flatten(*p, r, params), *p));
  auto q = js::parse_source("function f() { return 1; } print(f()); print(2);");
  Rng r2(1);
  CHECK(js::structural_eq(*tf_flatten(*q, r2), *q));
}

TEST_CASE("flattening hoists declarations") {
  auto p = js::parse_source("function f(x) { let y = x + 1; const z = y * 2; print(z); return z; } print(f(3));");
  Rng r(5);
  auto out = tf_flatten(*p, r);
  CHECK(run(*out) == js::evaluate(*p));
  CHECK(count(*out, NodeKind::While) == 1);
}

TEST_CASE("dead code injection") {
  auto p = js::parse_source(kProgram);
  ObfuscationParams none;
  none.dci_ratio = 0;
  Rng r0(1);
  CHECK(js::structural_eq(*tf_dead_code(*p, r0, none), *p));
  ObfuscationParams all;
  all.dci_ratio = 1;
  Rng r1(1);
  auto out = tf_dead_code(*p, r1, all);
  CHECK(count(*out, NodeKind::If) > count(*p, NodeKind::If));
  CHECK(run(*out) == js::evaluate(*p));
}

TEST_CASE("opaque predicates evaluate to their declared truth") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng r(seed);
    for (bool truth : {true, false}) {
      auto e = make_opaque_predicate(r, truth);
      auto prog = js::make(NodeKind::Program);
      prog->kids.push_back(js::make_expr_stmt(std::move(e)));
      CHECK(js::evaluate(*prog).result == (truth ? "true" : "false"));
    }
  }
}

TEST_CASE("debug protection guards every function and the top level") {
  auto p = js::parse_source(kProgram);
  auto out = tf_debug_protection(*p);
  CHECK(count(*out, NodeKind::DebuggerStmt) == 2);
  CHECK(out->kids[0]->is(NodeKind::DebuggerStmt));
  CHECK(run(*out) == js::evaluate(*p));
}

TEST_CASE("simplify merges declarations and folds branches") {
  auto p = js::parse_source(
      "var a = 1; var b = 2; if (a > b) { a = 3; } else { a = 4; } function f(x) { if (x) { return 1; } else { return 2; } } print(a, f(0));");
  auto out = tf_simplify(*p);
  CHECK(count(*out, NodeKind::VarDecl) == 1);
  CHECK(count(*out, NodeKind::If) == 0);
  CHECK(count(*out, NodeKind::Conditional) == 2);
  CHECK(run(*out) == js::evaluate(*p));
  auto mixed = js::parse_source("var a = 1; let b = 2; print(a + b);");
  CHECK(count(*tf_simplify(*mixed), NodeKind::VarDecl) == 2);
}

TEST_CASE("split strings") {
  auto p = js::parse_source("var s = \"abcdefghij\"; var t = \"ab\"; var o = {key: 1}; print(s, t, o.key);");
  Rng r(1);
  auto out = tf_split_strings(*p, r);
  int literals = 0;
  js::walk(*out, [&](const js::Node& n) {
    if (n.is_string()) {
      ++literals;
      CHECK(n.text.size() <= 4);
    }
    return true;
  });
  CHECK(literals >= 5);
  CHECK(run(*out) == js::evaluate(*p));
  ObfuscationParams params;
  params.ss_chunk_len = 3;
  Rng r2(1);
  auto three = tf_split_strings(*js::parse_source("print(\"\xF0\x9F\x98\x80\xF0\x9F\x98\x80\xF0\x9F\x98\x80xy\");"), r2, params);
  CHECK(run(*three).output == std::vector<std::string>{"\xF0\x9F\x98\x80\xF0\x9F\x98\x80\xF0\x9F\x98\x80xy"});
}

TEST_CASE("string array") {
  auto p = js::parse_source("var a = \"red\"; var b = \"red\"; var c = \"blue\"; print(a, b, c, a.length);");
  Rng r(3);
  StringArrayTable table;
  auto out = tf_string_array(*p, r, {}, &table);
  CHECK(table.entries.size() == 3);  // red, blue, length
  std::set<std::string> unique(table.entries.begin(), table.entries.end());
  CHECK(unique.size() == table.entries.size());
  CHECK(run(*out) == js::evaluate(*p));
  ObfuscationParams shifted;
  shifted.sa_index_shift = 5;
  Rng r2(3);
  StringArrayTable t2;
  auto out2 = tf_string_array(*p, r2, shifted, &t2);
  CHECK(t2.shift == 5);
  CHECK(run(*out2) == js::evaluate(*p));
  auto none = js::parse_source("print(1 + 2);");
  Rng r3(1);
  CHECK(js::structural_eq(*tf_string_array(*none, r3), *none));
}

TEST_CASE("self defending needs compaction and breaks when reformatted") {
  auto p = js::parse_source(kProgram);
  Rng r(1);
  CHECK_THROWS_AS(tf_self_defending(*p, r, false), TransformError);
  auto out = apply(*p, config({Technique::SD}));
  CHECK(out->compact);
  CHECK(js::evaluate(*out) == js::evaluate(*p));
  js::EvalOptions pretty;
  pretty.self_text = js::print_pretty(*out);
  pretty.budget = 200000;
  auto t = js::evaluate(*out, pretty);
  CHECK(t.output != js::evaluate(*p).output);
}

TEST_CASE("member literalization") {
  auto p = js::parse_source("var o = {k: 1}; print(o.k);");
  literalize_members(*p);
  CHECK(js::print_compact(*p).find("o[\"k\"]") != std::string::npos);
}

TEST_CASE("corpus: every variant re-parses and keeps jump targets valid") {
  auto singles = enumerate_configs(all_techniques(), EnumerationMode::Singles, 0, 1);
  auto pairs = enumerate_configs(all_techniques(), EnumerationMode::ByCount, 2, 3);
  singles.insert(singles.end(), pairs.begin(), pairs.end());
  for (const auto& c : test::corpus_programs()) {
    CAPTURE(c.name);
    for (const auto& cfg : singles) {
      auto text = js::print_program(*apply(*c.program, cfg));
      js::NodePtr back;
      CHECK_NOTHROW(back = js::parse_source(text));
      if (back) CHECK_NOTHROW(js::check_jump_targets(*back));
    }
  }
}

TEST_CASE("corpus: dead code adds no findings") {
  auto rules = scan::default_ruleset();
  for (const auto& c : test::corpus_programs()) {
    CAPTURE(c.name);
    auto base = scan::scan(*c.program, rules);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      auto cfg = config({Technique::DCI}, seed);
      cfg.params.dci_ratio = 1.0;
      auto variant = scan::scan(*js::parse_source(js::print_program(*apply(*c.program, cfg))), rules);
      for (const auto& [rule, n] : variant.rule_counts) CHECK(n <= base.rule_counts[rule]);
    }
  }
}

TEST_CASE("flattening scrambles execution order across seeds") {
  auto p = js::parse_source("function f(a) { var b = a + 1; print(b); var c = b * 2; print(c); return c; } f(1);");
  int scrambled = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng r(seed);
    auto out = tf_flatten(*p, r);
    const js::Node* sw = nullptr;
    js::walk(*out, [&](const js::Node& n) {
      if (n.is(NodeKind::Switch)) sw = &n;
      return true;
    });
    REQUIRE(sw);
    // a case whose successor state labels an earlier case means layout and execution disagree
    std::vector<double> labels;
    for (std::size_t i = 1; i < sw->kids.size(); ++i) labels.push_back(sw->kids[i]->kids[0]->number);
    bool disagree = false;
    for (std::size_t i = 1; i < sw->kids.size(); ++i) {
      const js::Node& c = *sw->kids[i];
      double next = c.kids[c.kids.size() - 2]->kids[0]->kids[1]->number;
      auto it = std::find(labels.begin(), labels.end(), next);
      if (it != labels.end() && static_cast<std::size_t>(it - labels.begin()) + 1 != i + 1 &&
          static_cast<std::size_t>(it - labels.begin()) != i)
        disagree = true;
    }
    scrambled += disagree ? 1 : 0;
  }
  CHECK(scrambled >= 95);
}
