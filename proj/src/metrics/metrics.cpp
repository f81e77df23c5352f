#include "vdl/metrics/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "vdl/js/lexer.hpp"

namespace vdl::metrics {

using js::Node;
using js::NodeKind;

Stats describe(const std::vector<double>& values) {
  Stats s;
  s.n = values.size();
  if (values.empty()) return s;
  s.min = *std::min_element(values.begin(), values.end());
  s.max = *std::max_element(values.begin(), values.end());
  for (double v : values) s.total += v;
  s.avg = s.total / static_cast<double>(s.n);
  double sq = 0;
  for (double v : values) sq += (v - s.avg) * (v - s.avg);
  s.stddev = std::sqrt(sq / static_cast<double>(s.n));
  return s;
}

int physical_sloc(const std::string& source) {
  std::set<int> lines;
  for (const auto& t : js::tokenize(source)) {
    if (t.kind == js::TokenKind::End) continue;
    for (int l = t.span.start_line; l <= t.span.end_line; ++l) lines.insert(l);
  }
  return static_cast<int>(lines.size());
}

namespace {

void count(const Node& n, FunctionMetrics& m, bool root) {
  if (!root && js::is_function(n.kind)) return;
  switch (n.kind) {
    case NodeKind::If:
    case NodeKind::While:
    case NodeKind::DoWhile:
    case NodeKind::For:
      ++m.cyclomatic;
      ++m.operators;
      break;
    case NodeKind::Switch:
    case NodeKind::Return:
      ++m.operators;
      break;
    case NodeKind::Case:
      if (n.kid(0)) ++m.cyclomatic;
      break;
    case NodeKind::Conditional:
      ++m.cyclomatic;
      ++m.operators;
      break;
    case NodeKind::Binary:
      if (n.text == "&&" || n.text == "||") ++m.cyclomatic;
      ++m.operators;
      break;
    case NodeKind::Unary:
    case NodeKind::Assign:
    case NodeKind::Call:
    case NodeKind::New:
      ++m.operators;
      break;
    case NodeKind::Member:
      ++m.operators;
      if (!n.computed) ++m.operands;
      break;
    case NodeKind::Declarator:
      ++m.operands;
      if (!n.kids.empty()) ++m.operators;
      break;
    case NodeKind::Identifier:
    case NodeKind::Literal:
      ++m.operands;
      break;
    default:
      break;
  }
  for (const auto& k : n.kids)
    if (k) count(*k, m, false);
}

}  // namespace

FunctionMetrics function_metrics(const Node& fn) {
  FunctionMetrics m;
  m.name = fn.text.empty() ? "<anonymous>" : fn.text;
  m.line = fn.span.start_line;
  count(*fn.kids[0], m, true);
  return m;
}

FileMetrics compute_metrics(const std::string& path, const std::string& source, const Node& program) {
  FileMetrics fm;
  fm.path = path;
  fm.sloc = physical_sloc(source);
  js::walk(program, [&](const Node& n) {
    if (js::is_function(n.kind)) fm.functions.push_back(function_metrics(n));
    return true;
  });
  return fm;
}

ProjectMetrics aggregate_metrics(const std::vector<FileMetrics>& files) {
  if (files.empty()) throw EmptyInput("no files to aggregate");
  ProjectMetrics pm;
  pm.files = files;
  std::vector<double> sloc, cc, hal;
  for (const auto& f : files) {
    sloc.push_back(f.sloc);
    for (const auto& fn : f.functions) {
      cc.push_back(fn.cyclomatic);
      hal.push_back(fn.halstead_length());
    }
  }
  pm.sloc = describe(sloc);
  pm.cc = describe(cc);
  pm.halstead = describe(hal);
  return pm;
}

std::string format_table(const ProjectMetrics& m, const std::string& title) {
  std::string out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s\n", title.c_str());
  out += buf;
  std::snprintf(buf, sizeof buf, "%-30s %10s %10s %10s %10s\n", "Metric", "Min", "Avg", "Max", "Std. Dev.");
  out += buf;
  auto row = [&](const char* name, const Stats& s) {
    std::snprintf(buf, sizeof buf, "%-30s %10.2f %10.2f %10.2f %10.2f\n", name, s.min, s.avg, s.max, s.stddev);
    out += buf;
  };
  row("Global Physical SLOC", m.sloc);
  row("CC per function Avg", m.cc);
  row("Halstead Length per function", m.halstead);
  return out;
}

}  // namespace vdl::metrics
