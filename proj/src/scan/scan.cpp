#include <algorithm>
#include <tuple>

#include "vdl/scan/scan.hpp"

namespace vdl::scan {

bool finding_less(const Finding& a, const Finding& b) {
  auto key = [](const Finding& f) {
    return std::tie(f.file, f.span.start_line, f.span.start_col, f.span.end_line, f.span.end_col, f.rule_id);
  };
  return key(a) < key(b);
}

void ScanReport::add(Finding f) {
  ++rule_counts[f.rule_id];
  ++severity_counts[f.severity];
  findings.push_back(std::move(f));
}

void ScanReport::finalize() {
  std::stable_sort(findings.begin(), findings.end(), finding_less);
  rule_counts.clear();
  severity_counts.clear();
  for (const auto& f : findings) {
    ++rule_counts[f.rule_id];
    ++severity_counts[f.severity];
  }
}

ScanReport ScanReport::filtered(const SeverityFilter& filter) const {
  ScanReport out;
  out.tool = tool;
  out.project_id = project_id;
  out.variant_id = variant_id;
  for (const auto& f : findings)
    if (filter.accepts(f.severity)) out.add(f);
  return out;
}

ScanReport scan(const js::Node& program, const std::vector<Rule>& rules, const std::string& file) {
  ScanReport report;
  for (const auto& rule : rules) {
    auto found = rule.kind == RuleKind::Pattern ? match_pattern(rule, program) : taint_program(rule, program);
    for (auto& f : found) {
      f.file = file;
      report.add(std::move(f));
    }
  }
  report.finalize();
  return report;
}

}  // namespace vdl::scan
