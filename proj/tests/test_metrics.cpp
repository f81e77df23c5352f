#include <doctest.h>

#include <cmath>

#include "metric_cases.hpp"
#include "support.hpp"
#include "vdl/js/parser.hpp"
#include "vdl/harness/project.hpp"
#include "vdl/js/printer.hpp"
#include "vdl/metrics/metrics.hpp"
#include "vdl/obf/obfuscate.hpp"

using namespace vdl;
using namespace vdl::metrics;


TEST_CASE("cyclomatic complexity and Halstead length on documented snippets") {
  for (const auto& s : test::kMetricSnippets) {
    CAPTURE(s.source);
    auto p = js::parse_source(s.source);
    auto m = function_metrics(*p->kids[0]);
    CHECK(m.cyclomatic == s.cc);
    CHECK(m.operators == s.n1);
    CHECK(m.operands == s.n2);
    CHECK(m.halstead_length() == s.n1 + s.n2);
  }
}

TEST_CASE("nested functions are reported separately") {
  const std::string src = "function outer(a) {\n  var g = function (b) { return b ? 1 : 2; };\n  return g(a);\n}\n";
  auto fm = compute_metrics("x.js", src, *js::parse_source(src));
  REQUIRE(fm.functions.size() == 2);
  CHECK(fm.functions[0].name == "outer");
  CHECK(fm.functions[0].cyclomatic == 1);
  CHECK(fm.functions[1].name == "<anonymous>");
  CHECK(fm.functions[1].line == 2);
  CHECK(fm.functions[1].cyclomatic == 2);
}

TEST_CASE("physical sloc counts lines holding tokens") {
  CHECK(physical_sloc("var a = 1;\n\n// note\nvar b =\n  2;\n") == 3);
  CHECK(physical_sloc("/* block\n comment */\n") == 0);
  CHECK(physical_sloc("a;") == 1);
}

TEST_CASE("population standard deviation") {
  auto a = describe({2, 4, 4, 4, 5, 5, 7, 9});
  CHECK(a.avg == doctest::Approx(5.0));
  CHECK(a.stddev == doctest::Approx(2.0));
  CHECK(a.min == 2);
  CHECK(a.max == 9);
  auto b = describe({7});
  CHECK(b.stddev == 0.0);
  CHECK(b.avg == 7.0);
  auto c = describe({1, 2, 3, 4});
  CHECK(c.stddev == doctest::Approx(std::sqrt(1.25)).epsilon(1e-12));
  CHECK(c.total == 10.0);
  CHECK(describe({}).n == 0);
}

TEST_CASE("aggregation pools functions across files") {
  FileMetrics f1{"a.js", 10, {{"f", 1, 1, 2, 2}, {"g", 2, 2, 4, 4}}};
  FileMetrics f2{"b.js", 20, {{"h", 1, 3, 6, 6}}};
  auto pm = aggregate_metrics({f1, f2});
  CHECK(pm.sloc.avg == 15.0);
  CHECK(pm.cc.n == 3);
  CHECK(pm.cc.avg == 2.0);
  CHECK(pm.halstead.max == 12.0);
  CHECK_THROWS_AS(aggregate_metrics({}), EmptyInput);
}

TEST_CASE("table layout matches the golden file") {
  std::vector<FileMetrics> files{{"a.js", 10, {{"f", 1, 1, 2, 2}, {"g", 1, 2, 4, 4}}},
                                 {"b.js", 20, {{"h", 1, 3, 6, 6}}},
                                 {"c.js", 30, {{"k", 1, 6, 8, 8}}}};
  auto pm = aggregate_metrics(files);
  CHECK(format_table(pm, "demo-project") == test::slurp(test::golden("table2.txt")));
}

TEST_CASE("dead code never shrinks size metrics and compact output is one line") {
  for (const auto& entry : std::filesystem::directory_iterator(test::corpus())) {
    if (!entry.is_directory()) continue;
    auto project = harness::ingest_project(entry.path());
    for (std::size_t i = 0; i < project.files.size(); ++i) {
      const auto& program = *project.programs[i];
      CAPTURE(entry.path().filename().string());
      const auto before_text = js::print_pretty(program);
      auto before = compute_metrics("x.js", before_text, *js::parse_source(before_text));
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        obf::ObfuscationParams params;
        params.dci_ratio = 1.0;
        obf::Rng rng(seed);
        const auto after_text = js::print_pretty(*obf::tf_dead_code(program, rng, params));
        auto after = compute_metrics("x.js", after_text, *js::parse_source(after_text));
        CHECK(after.sloc >= before.sloc);
        REQUIRE(after.functions.size() == before.functions.size());
        for (std::size_t f = 0; f < before.functions.size(); ++f)
          CHECK(after.functions[f].halstead_length() >= before.functions[f].halstead_length());
      }
      obf::ObfuscationConfig cmp;
      cmp.techniques = {obf::Technique::CMP};
      CHECK(physical_sloc(js::print_program(*obf::apply(program, cmp))) == 1);
    }
  }
}
