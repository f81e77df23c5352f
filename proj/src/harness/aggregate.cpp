#include "vdl/harness/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace vdl::harness {

double quantile(std::vector<double> v, double p) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  const double h = (static_cast<double>(v.size()) - 1) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (h - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

BoxplotStats boxplot(std::string key, std::vector<double> values) {
  BoxplotStats b;
  b.group_key = std::move(key);
  b.n = values.size();
  if (values.empty()) return b;
  std::sort(values.begin(), values.end());
  b.min = values.front();
  b.max = values.back();
  b.q1 = quantile(values, 0.25);
  b.median = quantile(values, 0.5);
  b.q3 = quantile(values, 0.75);
  const double iqr = b.q3 - b.q1;
  const double lo_fence = b.q1 - 1.5 * iqr;
  const double hi_fence = b.q3 + 1.5 * iqr;
  b.lower_whisker = b.q1;
  b.upper_whisker = b.q3;
  for (double v : values) {
    if (v >= lo_fence && v < b.lower_whisker) b.lower_whisker = v;
    if (v <= hi_fence && v > b.upper_whisker) b.upper_whisker = v;
  }
  for (double v : values)
    if (v < b.lower_whisker || v > b.upper_whisker) b.outliers.push_back(v);
  return b;
}

std::string_view group_by_name(GroupBy g) {
  switch (g) {
    case GroupBy::Technique: return "technique";
    case GroupBy::PluginCount: return "plugin_count";
    case GroupBy::Project: return "project";
    case GroupBy::Severity: return "severity";
  }
  return "?";
}

std::optional<GroupBy> parse_group_by(std::string_view s) {
  for (GroupBy g : {GroupBy::Technique, GroupBy::PluginCount, GroupBy::Project, GroupBy::Severity})
    if (group_by_name(g) == s) return g;
  return std::nullopt;
}

std::string group_key(const VdlRecord& r, GroupBy g) {
  std::string base;
  switch (g) {
    case GroupBy::Technique: base = r.config; break;
    case GroupBy::PluginCount: base = std::to_string(r.plugin_count); break;
    case GroupBy::Project: base = r.project; break;
    case GroupBy::Severity: return r.severity_filter ? r.severity_filter->name() : "all";
  }
  if (r.severity_filter) base += "|" + r.severity_filter->name();
  return base;
}

Aggregation aggregate(const std::vector<VdlRecord>& records, GroupBy g) {
  Aggregation out;
  out.group_by = g;
  std::map<std::string, std::vector<double>> groups;
  for (const auto& r : records) {
    if (!r.defined()) {
      ++out.undefined;
      continue;
    }
    groups[group_key(r, g)].push_back(*r.vdl);
  }
  for (auto& [key, values] : groups) out.groups.push_back(boxplot(key, std::move(values)));
  return out;
}

std::vector<std::optional<double>> mean_vdl_by_plugin_count(const std::vector<VdlRecord>& records) {
  std::vector<double> sum(9, 0.0);
  std::vector<int> n(9, 0);
  for (const auto& r : records) {
    if (r.severity_filter || !r.defined() || r.plugin_count < 1 || r.plugin_count > 8) continue;
    sum[static_cast<std::size_t>(r.plugin_count)] += *r.vdl;
    ++n[static_cast<std::size_t>(r.plugin_count)];
  }
  std::vector<std::optional<double>> out(9);
  for (std::size_t k = 1; k <= 8; ++k)
    if (n[k] > 0) out[k] = sum[k] / n[k];
  return out;
}

}  // namespace vdl::harness
