#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vdl/obf/technique.hpp"
#include "vdl/scan/scan.hpp"

namespace vdl::harness {

struct VdlRecord {
  std::string project;
  std::string config;  // sorted acronyms joined by '+'
  std::uint64_t seed = 0;
  int plugin_count = 0;  // after the implied-CMP expansion
  std::optional<scan::SeverityFilter> severity_filter;
  int baseline = 0;
  int matched = 0;
  std::optional<double> vdl;  // nullopt when the baseline is empty

  bool defined() const { return vdl.has_value(); }
};

/// Sum over rule ids of min(baseline count, variant count).
int match_findings(const scan::ScanReport& baseline, const scan::ScanReport& variant);

/// Both reports are filtered first when a filter is given.
VdlRecord compute_vdl(const scan::ScanReport& baseline, const scan::ScanReport& variant,
                      const std::optional<scan::SeverityFilter>& filter);

/// Records for one variant: unfiltered, then each entry of all_severity_filters().
std::vector<VdlRecord> vdl_records(const std::string& project, const obf::ObfuscationConfig& config,
                                   const scan::ScanReport& baseline, const scan::ScanReport& variant);

}  // namespace vdl::harness
