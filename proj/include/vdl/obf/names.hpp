#pragma once

#include <string>
#include <unordered_set>

#include "vdl/js/ast.hpp"
#include "vdl/obf/rng.hpp"

namespace vdl::obf {

/// Hands out `_0x` + 4 hex digit identifiers that clash with nothing already
/// named in the program or previously handed out.
class NameGen {
 public:
  NameGen(const js::Node& program, Rng& rng);

  std::string fresh();

 private:
  Rng& rng_;
  std::unordered_set<std::string> taken_;
};

}  // namespace vdl::obf
