#pragma once

#include <map>
#include <string>

#include "vdl/js/ast.hpp"
#include "vdl/obf/technique.hpp"

namespace vdl::harness {

struct Detection {
  double score = 0;  // fraction of flags raised
  std::map<obf::Technique, bool> flags;  // CMP, CFF, DP, SA, SS

  bool flagged(obf::Technique t) const {
    auto it = flags.find(t);
    return it != flags.end() && it->second;
  }
};

/// Techniques the detector has a heuristic for.
std::vector<obf::Technique> detectable_techniques();

/// `source` is the text `program` was parsed from; it drives the line-based
/// layout check.
Detection detect_obfuscation(const js::Node& program, const std::string& source);

}  // namespace vdl::harness
