#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vdl/js/ast.hpp"
#include "vdl/scan/rules.hpp"

namespace vdl::scan {

struct Finding {
  std::string rule_id;
  Severity severity = Severity::Low;
  js::SourceSpan span;
  std::string file;  // project-relative path, empty for a bare program
  std::string message;
  std::optional<std::vector<js::SourceSpan>> taint_path;

  int line() const { return span.start_line; }
};

/// Orders by file, span, then rule id.
bool finding_less(const Finding& a, const Finding& b);

struct ScanReport {
  std::string tool = "vdl-scan";
  std::string project_id;
  std::string variant_id;
  std::vector<Finding> findings;
  std::map<std::string, int> rule_counts;
  std::map<Severity, int> severity_counts;

  void add(Finding f);
  /// Sorts findings and recomputes the tallies from scratch.
  void finalize();
  std::size_t size() const { return findings.size(); }
  ScanReport filtered(const SeverityFilter& filter) const;
};

/// Member path of an expression such as `req.query.id` or `req["query"]`;
/// nullopt when any link is computed from a non-literal or the root is not a
/// plain identifier.
std::optional<std::vector<std::string>> member_path(const js::Node& expr);
std::string join_path(const std::vector<std::string>& path);

/// Callee pattern semantics shared by pattern rules, sinks and sanitizers.
bool callee_matches(const js::Node& callee, const std::string& pattern);

std::vector<Finding> match_pattern(const Rule& rule, const js::Node& program);

/// Intraprocedural, single forward pass in source order. `unit` is a
/// function or a program; nested functions are not entered.
std::vector<Finding> taint_analyze(const js::Node& unit, const Rule& rule);

/// Runs taint_analyze on the program's top level and every function.
std::vector<Finding> taint_program(const Rule& rule, const js::Node& program);

ScanReport scan(const js::Node& program, const std::vector<Rule>& rules, const std::string& file = "");

// ---- control flow ----

struct CfgNode {
  int id = 0;
  std::vector<const js::Node*> stmts;
};

struct Cfg {
  static constexpr int kEntry = 0;
  static constexpr int kExit = 1;
  std::vector<CfgNode> nodes;  // nodes[0] = entry, nodes[1] = exit
  std::vector<std::pair<int, int>> edges;

  bool has_edge(int from, int to) const;
  std::vector<int> successors(int id) const;
  /// Nodes other than entry and exit.
  std::size_t block_count() const { return nodes.size() - 2; }
  std::vector<bool> reachable() const;
};

/// `fn` is a FunctionDecl, FunctionExpr or Program.
Cfg build_cfg(const js::Node& fn);

}  // namespace vdl::scan
