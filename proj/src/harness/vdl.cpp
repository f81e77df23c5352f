#include "vdl/harness/vdl.hpp"

#include <algorithm>

namespace vdl::harness {

int match_findings(const scan::ScanReport& baseline, const scan::ScanReport& variant) {
  int matched = 0;
  for (const auto& [rule, n] : baseline.rule_counts) {
    auto it = variant.rule_counts.find(rule);
    if (it != variant.rule_counts.end()) matched += std::min(n, it->second);
  }
  return matched;
}

VdlRecord compute_vdl(const scan::ScanReport& baseline, const scan::ScanReport& variant,
                      const std::optional<scan::SeverityFilter>& filter) {
  VdlRecord r;
  r.severity_filter = filter;
  if (filter) {
    auto b = baseline.filtered(*filter);
    auto v = variant.filtered(*filter);
    r.baseline = static_cast<int>(b.size());
    r.matched = match_findings(b, v);
  } else {
    r.baseline = static_cast<int>(baseline.size());
    r.matched = match_findings(baseline, variant);
  }
  if (r.baseline > 0) r.vdl = 100.0 * (r.baseline - r.matched) / r.baseline;
  return r;
}

std::vector<VdlRecord> vdl_records(const std::string& project, const obf::ObfuscationConfig& config,
                                   const scan::ScanReport& baseline, const scan::ScanReport& variant) {
  std::vector<std::optional<scan::SeverityFilter>> filters{std::nullopt};
  for (const auto& f : scan::all_severity_filters()) filters.emplace_back(f);
  std::vector<VdlRecord> out;
  for (const auto& f : filters) {
    VdlRecord r = compute_vdl(baseline, variant, f);
    r.project = project;
    r.config = config.acronyms();
    r.seed = config.seed;
    r.plugin_count = config.plugin_count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace vdl::harness
