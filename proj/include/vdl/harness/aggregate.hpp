#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vdl/harness/vdl.hpp"

namespace vdl::harness {

struct BoxplotStats {
  std::string group_key;
  std::size_t n = 0;
  double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
  double lower_whisker = 0, upper_whisker = 0;
  std::vector<double> outliers;
};

/// Quantile by linear interpolation between closest ranks: h = (n-1)p.
double quantile(std::vector<double> sorted_values, double p);

/// Whiskers at the most extreme datum within 1.5 IQR of the box.
BoxplotStats boxplot(std::string key, std::vector<double> values);

enum class GroupBy { Technique, PluginCount, Project, Severity };

std::string_view group_by_name(GroupBy g);
std::optional<GroupBy> parse_group_by(std::string_view s);

struct Aggregation {
  GroupBy group_by = GroupBy::Technique;
  std::vector<BoxplotStats> groups;  // sorted by key
  std::size_t undefined = 0;         // records left out for an empty baseline
};

/// Group key of a record. Severity grouping uses the filter name ("all" when
/// unfiltered); the other modes append "|<filter>" to filtered records so
/// each record lands in exactly one group.
std::string group_key(const VdlRecord& r, GroupBy g);

Aggregation aggregate(const std::vector<VdlRecord>& records, GroupBy g);

/// Mean of defined unfiltered VDL per plugin count, index = k (0 unused).
std::vector<std::optional<double>> mean_vdl_by_plugin_count(const std::vector<VdlRecord>& records);

}  // namespace vdl::harness
