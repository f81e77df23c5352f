#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "vdl/harness/project.hpp"
#include "vdl/harness/vdl.hpp"
#include "vdl/obf/technique.hpp"
#include "vdl/scan/rules.hpp"
#include "vdl/scan/scan.hpp"

namespace vdl::harness {

struct Variant {
  std::string project_id;
  obf::ObfuscationConfig config;
  std::filesystem::path output_root;
  std::vector<std::string> files;  // relative paths, same order as the project
};

/// Scans every file of a project and merges the findings.
scan::ScanReport scan_project(const Project& project, const std::vector<scan::Rule>& rules,
                              const std::string& variant_id = "baseline");

/// Transforms each file independently and writes the tree, plus
/// manifest.json, to out_dir/<config label>/.
Variant generate_variant(const Project& project, const obf::ObfuscationConfig& config,
                         const std::filesystem::path& out_dir);
std::vector<Variant> generate_variants(const Project& project, const std::vector<obf::ObfuscationConfig>& configs,
                                       const std::filesystem::path& out_dir);

/// Re-reads a written variant tree from disk and scans it.
scan::ScanReport scan_variant(const Variant& variant, const std::vector<scan::Rule>& rules);

struct VariantFailure {
  std::string project;
  std::string config;
  std::uint64_t seed = 0;
  std::string message;
};

struct EvaluationResult {
  std::vector<VdlRecord> records;
  std::vector<VariantFailure> failures;
  std::size_t attempted = 0;
  std::size_t succeeded = 0;
};

struct EvaluationSettings {
  std::vector<obf::ObfuscationConfig> configs;
  std::vector<scan::Rule> rules = scan::default_ruleset();
  int parallelism = 1;
  std::filesystem::path out_dir;  // variants land in out_dir/<project>/<label>/
};

/// Baseline scan, variant generation and rescans for every (project, config)
/// pair. Record order depends only on the inputs, never on parallelism.
EvaluationResult evaluate(const std::vector<Project>& projects, const EvaluationSettings& settings);

std::string failures_to_json(const std::vector<VariantFailure>& failures);

}  // namespace vdl::harness
