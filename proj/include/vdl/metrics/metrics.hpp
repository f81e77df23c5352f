#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "vdl/js/ast.hpp"

namespace vdl::metrics {

struct FunctionMetrics {
  std::string name;  // "<anonymous>" for unnamed function expressions
  int line = 0;
  int cyclomatic = 1;
  int operators = 0;  // N1
  int operands = 0;   // N2
  int halstead_length() const { return operators + operands; }
};

struct FileMetrics {
  std::string path;
  int sloc = 0;
  std::vector<FunctionMetrics> functions;
};

struct Stats {
  std::size_t n = 0;
  double min = 0, avg = 0, max = 0, stddev = 0, total = 0;
};

/// Population statistics; all zero when `values` is empty.
Stats describe(const std::vector<double>& values);

struct ProjectMetrics {
  std::vector<FileMetrics> files;
  Stats sloc;       // over per-file SLOC
  Stats cc;         // over every function, pooled across files
  Stats halstead;   // over every function, pooled across files
};

class EmptyInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Lines holding at least one token.
int physical_sloc(const std::string& source);

FileMetrics compute_metrics(const std::string& path, const std::string& source, const js::Node& program);

/// Cyclomatic number and Halstead counts for one function body, not entering
/// nested functions.
FunctionMetrics function_metrics(const js::Node& fn);

ProjectMetrics aggregate_metrics(const std::vector<FileMetrics>& files);

/// Metric rows by Min/Avg/Max/Std. Dev. columns.
std::string format_table(const ProjectMetrics& m, const std::string& title);

}  // namespace vdl::metrics
