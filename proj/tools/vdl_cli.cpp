// vdl: obfuscate JavaScript, scan it, and measure vulnerability detection loss.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "vdl/harness/aggregate.hpp"
#include "vdl/harness/detect.hpp"
#include "vdl/harness/evaluate.hpp"
#include "vdl/harness/project.hpp"
#include "vdl/harness/report_io.hpp"
#include "vdl/js/interp.hpp"
#include "vdl/js/parser.hpp"
#include "vdl/js/printer.hpp"
#include "vdl/metrics/metrics.hpp"
#include "vdl/obf/obfuscate.hpp"

namespace fs = std::filesystem;
using namespace vdl;

namespace {

constexpr int kOk = 0;
constexpr int kRuntime = 1;
constexpr int kInput = 2;
constexpr int kUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParamFlags {
  obf::ObfuscationParams params;
  std::optional<std::uint64_t> seed;

  void attach(CLI::App* cmd) {
    cmd->add_option("--seed", seed, "RNG seed (falls back to $VDL_SEED, then 1)");
    cmd->add_option("--chunk", params.ss_chunk_len, "split-strings chunk length")->capture_default_str();
    cmd->add_option("--dci-ratio", params.dci_ratio, "fraction of blocks given dead code")->capture_default_str();
    cmd->add_option("--cff-min", params.cff_min_stmts, "minimum statements for flattening")->capture_default_str();
    cmd->add_option("--sa-shift", params.sa_index_shift, "string array index shift")->capture_default_str();
  }

  std::uint64_t resolved_seed() const {
    if (seed) return *seed;
    if (const char* env = std::getenv("VDL_SEED")) {
      try {
        return std::stoull(env);
      } catch (const std::exception&) {
        throw UsageError(std::string("VDL_SEED is not an unsigned integer: ") + env);
      }
    }
    return 1;
  }

  obf::ObfuscationParams validated() const {
    try {
      params.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return params;
  }
};

obf::TechniqueSet parse_techniques(const std::vector<std::string>& raw) {
  obf::TechniqueSet out;
  for (const auto& item : raw) {
    std::size_t start = 0;
    while (start <= item.size()) {
      std::size_t end = item.find(',', start);
      if (end == std::string::npos) end = item.size();
      std::string tok = item.substr(start, end - start);
      if (!tok.empty()) {
        auto t = obf::parse_technique(tok);
        if (!t) throw UsageError("unknown technique: " + tok);
        out.insert(*t);
      }
      start = end + 1;
    }
  }
  if (out.empty()) throw UsageError("no techniques given");
  return out;
}

std::vector<scan::Rule> load_rules(const std::string& path) {
  if (path.empty()) return scan::default_ruleset();
  return scan::load_ruleset(path);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    harness::write_file(out_path, text);
  }
}

// A single file becomes a one-file project rooted at its directory.
harness::Project load_input(const fs::path& input) {
  if (fs::is_directory(input)) return harness::ingest_project(input);
  if (!fs::is_regular_file(input)) throw std::runtime_error("no such file or directory: " + input.string());
  harness::Project p;
  p.id = input.stem().string();
  p.root = input.parent_path();
  harness::SourceFile f{input.filename().string(), harness::read_file(input), 0};
  try {
    p.programs.push_back(std::shared_ptr<const js::Node>(js::parse_source(f.content, 0)));
  } catch (const js::SourceError& e) {
    throw harness::ParseFailures({f.path + ":" + e.what()});
  }
  p.files.push_back(std::move(f));
  return p;
}

int cmd_obfuscate(const std::string& input, const std::vector<std::string>& tech, const ParamFlags& flags,
                  const std::string& out) {
  obf::ObfuscationConfig config;
  config.techniques = parse_techniques(tech);
  config.seed = flags.resolved_seed();
  config.params = flags.validated();
  if (config.techniques.count(obf::Technique::SD) && !config.techniques.count(obf::Technique::CMP))
    std::cerr << "note: SD implies CMP; output is compacted\n";
  harness::Project project = load_input(input);
  auto v = harness::generate_variant(project, config, out);
  std::cout << config.label() << "\n";
  std::cerr << "wrote " << v.files.size() << " file(s) to " << v.output_root.string() << "\n";
  return kOk;
}

int cmd_scan(const std::string& input, const std::string& rules_path, const std::string& out) {
  auto rules = load_rules(rules_path);
  harness::Project project = load_input(input);
  auto report = harness::scan_project(project, rules);
  emit(harness::emit_external_report(report), out);
  return kOk;
}

struct EvalFlags {
  std::vector<std::string> mode{"singles"};
  int jobs = 1;
  std::string out = "out/eval";
  std::string rules;
};

int cmd_evaluate(const std::string& input, const EvalFlags& ef, const ParamFlags& flags) {
  obf::EnumerationMode mode;
  int k = 0;
  const std::string& m = ef.mode.at(0);
  if (m == "singles") {
    mode = obf::EnumerationMode::Singles;
  } else if (m == "all") {
    mode = obf::EnumerationMode::AllCombinations;
  } else if (m == "by-count") {
    mode = obf::EnumerationMode::ByCount;
    if (ef.mode.size() < 2) throw UsageError("--mode by-count needs k");
    try {
      k = std::stoi(ef.mode[1]);
    } catch (const std::exception&) {
      throw UsageError("k must be an integer");
    }
  } else {
    throw UsageError("unknown mode: " + m);
  }
  if (ef.jobs < 1) throw UsageError("--jobs must be positive");

  harness::EvaluationSettings settings;
  try {
    settings.configs = obf::enumerate_configs(obf::all_techniques(), mode, k, flags.resolved_seed(), flags.validated());
  } catch (const obf::InvalidMode& e) {
    throw UsageError(e.what());
  }
  settings.rules = load_rules(ef.rules);
  settings.parallelism = ef.jobs;
  settings.out_dir = fs::path(ef.out) / "variants";

  auto projects = harness::ingest_projects(input);
  if (projects.empty()) throw harness::NoFilesMatched("no projects under " + input);

  auto result = harness::evaluate(projects, settings);
  const fs::path out(ef.out);
  harness::write_file(out / "report.json", harness::records_to_json(result.records));
  harness::write_file(out / "failures.json", harness::failures_to_json(result.failures));
  for (auto g : {harness::GroupBy::Technique, harness::GroupBy::PluginCount, harness::GroupBy::Severity,
                 harness::GroupBy::Project}) {
    auto agg = harness::aggregate(result.records, g);
    harness::write_file(out / ("aggregate_" + std::string(harness::group_by_name(g)) + ".csv"),
                        harness::aggregation_to_csv(agg));
  }
  std::size_t undefined = 0;
  for (const auto& r : result.records) undefined += r.defined() ? 0 : 1;
  std::cerr << projects.size() << " project(s), " << settings.configs.size() << " config(s): " << result.succeeded
            << "/" << result.attempted << " variants ok, " << undefined << " undefined record(s)\n";
  auto means = harness::mean_vdl_by_plugin_count(result.records);
  for (std::size_t kk = 1; kk < means.size(); ++kk)
    if (means[kk]) std::cout << "k=" << kk << " mean_vdl=" << harness::format_number(*means[kk]) << "\n";
  return result.succeeded == 0 ? kRuntime : kOk;
}

int cmd_metrics(const std::string& input, bool as_json) {
  harness::Project project = load_input(input);
  std::vector<metrics::FileMetrics> files;
  for (std::size_t i = 0; i < project.files.size(); ++i)
    files.push_back(metrics::compute_metrics(project.files[i].path, project.files[i].content, *project.programs[i]));
  auto pm = metrics::aggregate_metrics(files);
  if (!as_json) {
    std::cout << metrics::format_table(pm, project.id);
    return kOk;
  }
  nlohmann::ordered_json j;
  auto stats = [](const metrics::Stats& s) {
    return nlohmann::ordered_json{{"n", s.n}, {"min", s.min}, {"avg", s.avg}, {"max", s.max}, {"stddev", s.stddev}};
  };
  j["project"] = project.id;
  j["sloc"] = stats(pm.sloc);
  j["cc_per_function"] = stats(pm.cc);
  j["halstead_length_per_function"] = stats(pm.halstead);
  j["files"] = nlohmann::ordered_json::array();
  for (const auto& f : pm.files) {
    nlohmann::ordered_json fj{{"path", f.path}, {"sloc", f.sloc}, {"functions", nlohmann::ordered_json::array()}};
    for (const auto& fn : f.functions)
      fj["functions"].push_back({{"name", fn.name}, {"line", fn.line}, {"cyclomatic", fn.cyclomatic},
                                 {"halstead_length", fn.halstead_length()}});
    j["files"].push_back(std::move(fj));
  }
  std::cout << j.dump(2) << "\n";
  return kOk;
}

int cmd_detect(const std::string& input, bool as_json) {
  const std::string text = harness::read_file(input);
  js::NodePtr program;
  try {
    program = js::parse_source(text);
  } catch (const js::SourceError& e) {
    std::cerr << input << ":" << e.what() << "\n";
    return kInput;
  }
  auto d = harness::detect_obfuscation(*program, text);
  if (as_json) {
    nlohmann::ordered_json j;
    j["score"] = d.score;
    for (auto t : harness::detectable_techniques()) j["flags"][std::string(obf::acronym(t))] = d.flagged(t);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "score " << harness::format_number(d.score) << "\n";
    for (auto t : harness::detectable_techniques())
      std::cout << obf::acronym(t) << " " << (d.flagged(t) ? "yes" : "no") << "\n";
  }
  return kOk;
}

int cmd_run(const std::string& input, std::uint64_t seed, std::uint64_t budget) {
  const std::string text = harness::read_file(input);
  js::NodePtr program;
  try {
    program = js::parse_source(text);
  } catch (const js::SourceError& e) {
    std::cerr << input << ":" << e.what() << "\n";
    return kInput;
  }
  js::EvalOptions opts;
  opts.seed = seed;
  opts.budget = budget;
  opts.self_text = text;
  try {
    auto trace = js::evaluate(*program, opts);
    for (const auto& line : trace.output) std::cout << line << "\n";
    std::cerr << "result " << trace.result << (trace.halted ? " (halted)" : "") << "\n";
  } catch (const js::RuntimeError& e) {
    std::cerr << input << ":" << e.what() << "\n";
    return kRuntime;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Obfuscation and SAST detection-loss toolkit"};
  app.require_subcommand(1);

  std::string input, out, rules;
  std::vector<std::string> tech;
  bool as_json = false;

  ParamFlags obf_flags;
  auto* obfuscate = app.add_subcommand("obfuscate", "transform a file or directory");
  obfuscate->add_option("input", input, "file or directory")->required();
  obfuscate->add_option("-t,--tech", tech, "techniques, comma separated or repeated")->required();
  obfuscate->add_option("-o,--out", out, "output root")->default_val("out");
  obf_flags.attach(obfuscate);

  auto* scan = app.add_subcommand("scan", "scan a file or directory and print a findings report");
  scan->add_option("input", input, "file or directory")->required();
  scan->add_option("--rules", rules, "ruleset JSON");
  std::string format = "json";
  std::string scan_out;
  scan->add_option("--format", format, "report format")->check(CLI::IsMember({"json"}));
  scan->add_option("-o,--out", scan_out, "write the report here instead of stdout");

  EvalFlags eval_flags;
  ParamFlags eval_params;
  auto* evaluate = app.add_subcommand("evaluate", "measure detection loss over a directory of projects");
  evaluate->add_option("input", input, "directory whose subdirectories are projects")->required();
  evaluate->add_option("--mode", eval_flags.mode, "singles | all | by-count K")->expected(1, 2);
  evaluate->add_option("-j,--jobs", eval_flags.jobs, "worker threads")->capture_default_str();
  evaluate->add_option("-o,--out", eval_flags.out, "output directory")->capture_default_str();
  evaluate->add_option("--rules", eval_flags.rules, "ruleset JSON");
  eval_params.attach(evaluate);

  auto* metrics_cmd = app.add_subcommand("metrics", "size and complexity metrics");
  metrics_cmd->add_option("input", input, "file or directory")->required();
  metrics_cmd->add_flag("--json", as_json, "emit JSON");

  auto* detect = app.add_subcommand("detect", "heuristic obfuscation detector");
  detect->add_option("input", input, "JavaScript file")->required();
  detect->add_flag("--json", as_json, "emit JSON");

  std::uint64_t run_seed = 0;
  std::uint64_t budget = js::kDefaultStepBudget;
  auto* run = app.add_subcommand("run", "execute a file with the reference evaluator");
  run->add_option("input", input, "JavaScript file")->required();
  run->add_option("--seed", run_seed, "seed for rand()")->capture_default_str();
  run->add_option("--budget", budget, "step budget")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*obfuscate) return cmd_obfuscate(input, tech, obf_flags, out);
    if (*scan) return cmd_scan(input, rules, scan_out);
    if (*evaluate) return cmd_evaluate(input, eval_flags, eval_params);
    if (*metrics_cmd) return cmd_metrics(input, as_json);
    if (*detect) return cmd_detect(input, as_json);
    if (*run) return cmd_run(input, run_seed, budget);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const harness::ParseFailures& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const harness::NoFilesMatched& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const js::SourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const scan::RulesetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntime;
  }
  return kUsage;
}
