#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vdl/js/ast.hpp"
#include "vdl/js/lexer.hpp"

namespace vdl::js {

class RuntimeError : public SourceError {
 public:
  using SourceError::SourceError;
};

inline constexpr std::uint64_t kDefaultStepBudget = 10'000'000;

struct EvalOptions {
  std::uint64_t budget = kDefaultStepBudget;
  std::uint64_t seed = 0;  // drives rand()
  // Text returned by selfText(); when unset the program is re-printed
  // according to its compact flag.
  std::optional<std::string> self_text;
};

/// Observable behaviour of one run. `result` is a typed rendering of the
/// program's final value: the return of a top-level main() when one is
/// declared, else the last expression statement evaluated outside any call.
struct Trace {
  std::vector<std::string> output;
  std::string result;
  bool halted = false;  // step budget exhausted
  std::uint64_t steps = 0;

  friend bool operator==(const Trace& a, const Trace& b) {
    return a.output == b.output && a.result == b.result && a.halted == b.halted;
  }
};

/// Runs `program` to completion or until the budget is spent. Throws
/// RuntimeError for undefined variables, calls of non-callables, property
/// access on undefined/null, assignment to const, and stack overflow.
Trace evaluate(const Node& program, const EvalOptions& options = {});

}  // namespace vdl::js
