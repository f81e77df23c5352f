#include <doctest.h>
#include <json.hpp>

#include <unistd.h>

#include <random>
#include <set>

#include "support.hpp"
#include "vdl/harness/aggregate.hpp"
#include "vdl/harness/detect.hpp"
#include "vdl/harness/evaluate.hpp"
#include "vdl/harness/project.hpp"
#include "vdl/harness/report_io.hpp"
#include "vdl/harness/vdl.hpp"
#include "vdl/js/parser.hpp"
#include "vdl/js/printer.hpp"
#include "vdl/obf/obfuscate.hpp"

using namespace vdl;
using namespace vdl::harness;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("vdl_harness_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

scan::Finding finding(const std::string& rule, scan::Severity sev, int line) {
  scan::Finding f;
  f.rule_id = rule;
  f.severity = sev;
  f.span.start_line = f.span.end_line = line;
  f.file = "a.js";
  return f;
}

scan::ScanReport report(std::initializer_list<scan::Finding> fs) {
  scan::ScanReport r;
  for (const auto& f : fs) r.add(f);
  r.finalize();
  return r;
}

VdlRecord rec(const std::string& project, const std::string& config, int baseline, int matched,
              std::optional<scan::SeverityFilter> filter = std::nullopt) {
  VdlRecord r;
  r.project = project;
  r.config = config;
  r.seed = 1;
  r.severity_filter = filter;
  r.baseline = baseline;
  r.matched = matched;
  r.plugin_count = static_cast<int>(std::count(config.begin(), config.end(), '+')) + 1;
  if (baseline > 0) r.vdl = 100.0 * (baseline - matched) / baseline;
  return r;
}

std::vector<VdlRecord> golden_records() {
  auto high = scan::SeverityFilter::of(scan::Severity::High);
  return {rec("p1", "CFF", 2, 0),     rec("p1", "SA", 2, 1),     rec("p1", "CFF+SA", 2, 0),
          rec("p2", "CFF", 4, 4),     rec("p2", "SA", 4, 3),     rec("p2", "CFF+SA", 4, 1),
          rec("p3", "CFF", 0, 0),     rec("p4", "CFF", 1, 0),    rec("p5", "CFF", 1, 0),
          rec("p6", "CFF", 1, 0),     rec("p1", "CFF", 1, 0, high), rec("p2", "CFF", 2, 2, high)};
}

}  // namespace

TEST_CASE("glob matching") {
  CHECK(glob_match("**/*.js", "a.js"));
  CHECK(glob_match("**/*.js", "src/lib/a.js"));
  CHECK_FALSE(glob_match("**/*.js", "a.ts"));
  CHECK(glob_match("src/*.js", "src/a.js"));
  CHECK_FALSE(glob_match("src/*.js", "src/x/a.js"));
  CHECK(glob_match("**/node_modules/**", "node_modules/x/y.js"));
  CHECK(glob_match("**/node_modules/**", "a/node_modules/y.js"));
  CHECK(glob_match("a?.js", "ab.js"));
  CHECK_FALSE(glob_match("a?.js", "a/.js"));
}

TEST_CASE("project ingestion") {
  auto dir = scratch("ingest");
  write_file(dir / "b.js", "var b = 1;");
  write_file(dir / "lib" / "a.js", "var a = 2;");
  write_file(dir / "node_modules" / "dep" / "x.js", "var x = 3;");
  write_file(dir / "notes.txt", "hello");
  auto p = ingest_project(dir);
  REQUIRE(p.files.size() == 2);
  CHECK(p.files[0].path == "b.js");
  CHECK(p.files[1].path == "lib/a.js");
  CHECK(p.programs.size() == 2);
  write_file(dir / "broken.js", "var = ;");
  CHECK_THROWS_AS(ingest_project(dir), ParseFailures);
  auto empty = scratch("ingest_empty");
  CHECK_THROWS_AS(ingest_project(empty), NoFilesMatched);
  fs::remove_all(dir);
  fs::remove_all(empty);
}

TEST_CASE("vdl arithmetic") {
  using scan::Severity;
  auto b = report({finding("r1", Severity::High, 1), finding("r1", Severity::High, 5), finding("r2", Severity::Low, 9)});
  auto v = report({finding("r1", Severity::High, 30), finding("r2", Severity::Low, 2), finding("r2", Severity::Low, 3),
                   finding("r3", Severity::Critical, 4)});
  CHECK(match_findings(b, v) == 2);
  auto r = compute_vdl(b, v, std::nullopt);
  CHECK(r.baseline == 3);
  CHECK(r.matched == 2);
  CHECK(*r.vdl == doctest::Approx(100.0 / 3.0));
  auto low = compute_vdl(b, v, scan::SeverityFilter::of(Severity::Low));
  CHECK(low.baseline == 1);
  CHECK(*low.vdl == 0.0);
  auto crit = compute_vdl(b, v, scan::SeverityFilter::of(Severity::Critical));
  CHECK(crit.baseline == 0);
  CHECK_FALSE(crit.defined());
  CHECK(*compute_vdl(b, scan::ScanReport{}, std::nullopt).vdl == 100.0);
  CHECK(*compute_vdl(b, b, std::nullopt).vdl == 0.0);
  obf::ObfuscationConfig c;
  c.techniques = {obf::Technique::SD};
  c.seed = 4;
  auto records = vdl_records("p", c, b, v);
  REQUIRE(records.size() == 7);
  CHECK_FALSE(records[0].severity_filter.has_value());
  CHECK(records[0].plugin_count == 2);
  CHECK(records[0].config == "SD");
  CHECK(records[0].seed == 4);
  CHECK(records[6].severity_filter->name() == "Error");
}

TEST_CASE("quantiles and box plots") {
  CHECK(quantile({0, 25, 50, 75, 100}, 0.5) == 50);
  CHECK(quantile({0, 25, 50, 75, 100}, 0.25) == 25);
  CHECK(quantile({1, 2, 3, 4}, 0.25) == doctest::Approx(1.75));
  CHECK(quantile({7}, 0.9) == 7);
  auto b = boxplot("k", {0, 100, 100, 100, 100});
  CHECK(b.q1 == 100);
  CHECK(b.lower_whisker == 100);
  CHECK(b.outliers == std::vector<double>{0});
  auto c = boxplot("k", {1, 2, 3, 4, 100});
  CHECK(c.upper_whisker == 4);
  CHECK(c.outliers == std::vector<double>{100});
}

TEST_CASE("group keys") {
  auto r = rec("p1", "CFF+SA", 2, 1);
  CHECK(group_key(r, GroupBy::Technique) == "CFF+SA");
  CHECK(group_key(r, GroupBy::PluginCount) == "2");
  CHECK(group_key(r, GroupBy::Project) == "p1");
  CHECK(group_key(r, GroupBy::Severity) == "all");
  auto f = rec("p1", "CFF", 2, 1, scan::SeverityFilter::of(scan::Level::Error));
  CHECK(group_key(f, GroupBy::Technique) == "CFF|Error");
  CHECK(group_key(f, GroupBy::Severity) == "Error");
  CHECK(parse_group_by("plugin_count") == GroupBy::PluginCount);
  CHECK_FALSE(parse_group_by("bogus").has_value());
}

TEST_CASE("aggregate csv matches golden files") {
  auto records = golden_records();
  for (GroupBy g : {GroupBy::Technique, GroupBy::PluginCount, GroupBy::Severity, GroupBy::Project}) {
    auto agg = aggregate(records, g);
    CHECK(agg.undefined == 1);
    const std::string name = "aggregate_" + std::string(group_by_name(g)) + ".csv";
    CAPTURE(name);
    CHECK(aggregation_to_csv(agg) == test::slurp(test::golden(name)));
  }
}

TEST_CASE("mean by plugin count ignores filtered and undefined records") {
  auto means = mean_vdl_by_plugin_count(golden_records());
  REQUIRE(means.size() >= 3);
  CHECK(*means[1] == doctest::Approx(475.0 / 7.0));
  CHECK(*means[2] == doctest::Approx(87.5));
}

TEST_CASE("external report round-trips byte for byte") {
  const std::string text = test::slurp(test::golden("external_report.json"));
  auto r = parse_external_report(text);
  CHECK(r.tool == "external-sast");
  CHECK(r.size() == 3);
  CHECK(r.rule_counts["js-eval-usage"] == 1);
  CHECK(emit_external_report(r) == text);
  CHECK(emit_external_report(parse_external_report(emit_external_report(r))) == text);
}

TEST_CASE("external report schema errors carry a pointer") {
  auto base = nlohmann::json::parse(test::slurp(test::golden("external_report.json")));
  auto expect_pointer = [](const nlohmann::json& doc, const std::string& pointer) {
    try {
      parse_external_report(doc.dump());
      FAIL("expected a schema error");
    } catch (const SchemaError& e) {
      CHECK(e.pointer() == pointer);
    }
  };
  auto d = base;
  d["findings"][1]["line"] = 0;
  expect_pointer(d, "/findings/1/line");
  d = base;
  d["findings"][0]["severity"] = "critical";
  expect_pointer(d, "/findings/0/severity");
  d = base;
  d["findings"][2]["column"] = 3;
  expect_pointer(d, "/findings/2/column");
  d = base;
  d.erase("tool");
  expect_pointer(d, "");
  d = base;
  d["findings"][0]["line"] = 2.5;
  expect_pointer(d, "/findings/0/line");
  CHECK_THROWS_AS(parse_external_report("{"), SchemaError);
}

TEST_CASE("vdl records round-trip through json") {
  auto records = golden_records();
  auto text = records_to_json(records);
  auto back = records_from_json(text);
  REQUIRE(back.size() == records.size());
  CHECK(records_to_json(back) == text);
  CHECK(back[2].plugin_count == 2);
  CHECK_FALSE(back[6].vdl.has_value());
}

TEST_CASE("variants are written with a manifest") {
  auto dir = scratch("variant");
  write_file(dir / "src" / "app.js", "function h(req) { var id = req.query.id; db.query(id); }\n");
  auto project = ingest_project(dir / "src");
  obf::ObfuscationConfig c;
  c.techniques = {obf::Technique::SS, obf::Technique::CFF};
  c.seed = 2;
  auto out = dir / "out";
  auto v = generate_variant(project, c, out);
  CHECK(v.output_root == out / "CFF+SS_s2");
  CHECK(fs::exists(v.output_root / "app.js"));
  auto manifest = nlohmann::json::parse(read_file(v.output_root / "manifest.json"));
  CHECK(manifest["label"] == "CFF+SS_s2");
  CHECK(manifest["plugin_count"] == 2);
  auto rules = scan::default_ruleset();
  CHECK(scan_project(project, rules).size() == 1);
  CHECK(scan_variant(v, rules).size() == 0);
  fs::remove_all(dir);
}

TEST_CASE("evaluation is deterministic across worker counts") {
  auto dir = scratch("eval");
  write_file(dir / "p1" / "index.js",
             "function h(req) { var id = req.query.id; db.query(\"x\" + id); }\nfunction k(c) { return eval(c); }\n");
  write_file(dir / "p2" / "index.js", "var total = 0;\nprint(\"a long greeting\", total);\n");
  auto projects = ingest_projects(dir);
  REQUIRE(projects.size() == 2);
  EvaluationSettings s;
  s.configs = obf::enumerate_configs(obf::all_techniques(), obf::EnumerationMode::ByCount, 2, 1);
  s.out_dir = dir / "out1";
  s.parallelism = 1;
  auto a = evaluate(projects, s);
  s.out_dir = dir / "out4";
  s.parallelism = 4;
  auto b = evaluate(projects, s);
  CHECK(a.attempted == 56);
  CHECK(a.succeeded == 56);
  CHECK(a.failures.empty());
  CHECK(a.records.size() == 56 * 7);
  CHECK(records_to_json(a.records) == records_to_json(b.records));
  fs::remove_all(dir);
}

TEST_CASE("detector") {
  auto clean = js::parse_source("function f(a) { return a + 1; }\nprint(f(2), \"some text here\");\n");
  auto src = js::print_pretty(*clean);
  auto d = detect_obfuscation(*js::parse_source(src), src);
  CHECK(d.score == 0.0);
  CHECK(detectable_techniques().size() == 5);
  obf::ObfuscationConfig c;
  c.techniques = {obf::Technique::DP};
  auto out = obf::apply(*clean, c);
  auto text = js::print_program(*out);
  auto dp = detect_obfuscation(*js::parse_source(text), text);
  CHECK(dp.flagged(obf::Technique::DP));
  CHECK(dp.score == doctest::Approx(0.2));
}

TEST_CASE("grouping partitions the defined records") {
  auto records = golden_records();
  std::size_t defined = 0;
  for (const auto& r : records) defined += r.defined() ? 1 : 0;
  for (GroupBy g : {GroupBy::Technique, GroupBy::PluginCount, GroupBy::Severity, GroupBy::Project}) {
    auto agg = aggregate(records, g);
    std::size_t total = 0;
    std::set<std::string> keys;
    for (const auto& b : agg.groups) {
      total += b.n;
      CHECK(keys.insert(b.group_key).second);
    }
    CHECK(total == defined);
    CHECK(total + agg.undefined == records.size());
  }
}
