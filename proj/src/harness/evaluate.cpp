#include "vdl/harness/evaluate.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "json.hpp"
#include "vdl/js/parser.hpp"
#include "vdl/js/printer.hpp"
#include "vdl/obf/obfuscate.hpp"

namespace vdl::harness {

namespace fs = std::filesystem;

scan::ScanReport scan_project(const Project& project, const std::vector<scan::Rule>& rules,
                              const std::string& variant_id) {
  scan::ScanReport report;
  report.project_id = project.id;
  report.variant_id = variant_id;
  for (std::size_t i = 0; i < project.files.size(); ++i) {
    auto r = scan::scan(*project.programs[i], rules, project.files[i].path);
    for (auto& f : r.findings) report.add(std::move(f));
  }
  report.finalize();
  return report;
}

Variant generate_variant(const Project& project, const obf::ObfuscationConfig& config, const fs::path& out_dir) {
  Variant v;
  v.project_id = project.id;
  v.config = config;
  v.output_root = out_dir / config.label();
  for (std::size_t i = 0; i < project.files.size(); ++i) {
    const auto& file = project.files[i];
    auto out = obf::apply(*project.programs[i], config);
    try {
      write_file(v.output_root / file.path, js::print_program(*out));
    } catch (const std::exception& e) {
      throw std::runtime_error(file.path + ": " + e.what());
    }
    v.files.push_back(file.path);
  }
  nlohmann::ordered_json m;
  m["project"] = project.id;
  m["label"] = config.label();
  m["techniques"] = nlohmann::ordered_json::array();
  for (auto t : config.techniques) m["techniques"].push_back(std::string(obf::acronym(t)));
  m["effective"] = nlohmann::ordered_json::array();
  for (auto t : config.effective()) m["effective"].push_back(std::string(obf::acronym(t)));
  m["plugin_count"] = config.plugin_count();
  m["seed"] = config.seed;
  m["params"] = {{"ss_chunk_len", config.params.ss_chunk_len},
                 {"dci_ratio", config.params.dci_ratio},
                 {"cff_min_stmts", config.params.cff_min_stmts},
                 {"sa_index_shift", config.params.sa_index_shift}};
  m["files"] = v.files;
  write_file(v.output_root / "manifest.json", m.dump(2) + "\n");
  return v;
}

std::vector<Variant> generate_variants(const Project& project, const std::vector<obf::ObfuscationConfig>& configs,
                                       const fs::path& out_dir) {
  std::vector<Variant> out;
  for (const auto& c : configs) out.push_back(generate_variant(project, c, out_dir));
  return out;
}

scan::ScanReport scan_variant(const Variant& variant, const std::vector<scan::Rule>& rules) {
  scan::ScanReport report;
  report.project_id = variant.project_id;
  report.variant_id = variant.config.label();
  for (std::size_t i = 0; i < variant.files.size(); ++i) {
    const std::string text = read_file(variant.output_root / variant.files[i]);
    js::NodePtr program;
    try {
      program = js::parse_source(text, static_cast<int>(i));
    } catch (const js::SourceError& e) {
      throw std::runtime_error(variant.files[i] + ": variant does not re-parse: " + e.what());
    }
    auto r = scan::scan(*program, rules, variant.files[i]);
    for (auto& f : r.findings) report.add(std::move(f));
  }
  report.finalize();
  return report;
}

namespace {

// Runs fn(i) for i in [0, n) on `workers` threads.
template <typename F>
void parallel_for(std::size_t n, int workers, F&& fn) {
  const std::size_t threads = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), 1, n ? n : 1);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

EvaluationResult evaluate(const std::vector<Project>& projects, const EvaluationSettings& settings) {
  std::vector<scan::ScanReport> baselines(projects.size());
  parallel_for(projects.size(), settings.parallelism,
               [&](std::size_t i) { baselines[i] = scan_project(projects[i], settings.rules); });

  const std::size_t nconf = settings.configs.size();
  const std::size_t total = projects.size() * nconf;
  struct Slot {
    std::vector<VdlRecord> records;
    std::optional<VariantFailure> failure;
  };
  std::vector<Slot> slots(total);
  parallel_for(total, settings.parallelism, [&](std::size_t idx) {
    const Project& p = projects[idx / nconf];
    const auto& config = settings.configs[idx % nconf];
    try {
      Variant v = generate_variant(p, config, settings.out_dir / p.id);
      auto report = scan_variant(v, settings.rules);
      slots[idx].records = vdl_records(p.id, config, baselines[idx / nconf], report);
    } catch (const std::exception& e) {
      slots[idx].failure = VariantFailure{p.id, config.acronyms(), config.seed, e.what()};
    }
  });

  EvaluationResult res;
  res.attempted = total;
  for (auto& s : slots) {
    if (s.failure) {
      res.failures.push_back(std::move(*s.failure));
      continue;
    }
    ++res.succeeded;
    for (auto& r : s.records) res.records.push_back(std::move(r));
  }
  return res;
}

std::string failures_to_json(const std::vector<VariantFailure>& failures) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& f : failures)
    arr.push_back({{"project", f.project}, {"config", f.config}, {"seed", f.seed}, {"error", f.message}});
  return arr.dump(2) + "\n";
}

}  // namespace vdl::harness
