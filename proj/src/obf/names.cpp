#include "vdl/obf/names.hpp"

#include <stdexcept>

namespace vdl::obf {

NameGen::NameGen(const js::Node& program, Rng& rng) : rng_(rng) {
  for (auto& n : js::collect_names(program)) taken_.insert(std::move(n));
}

std::string NameGen::fresh() {
  static constexpr char kHex[] = "0123456789abcdef";
  for (int attempt = 0; attempt < 1 << 20; ++attempt) {
    std::uint64_t v = rng_.below(0x10000);
    std::string name = "_0x";
    for (int shift = 12; shift >= 0; shift -= 4) name += kHex[(v >> shift) & 0xF];
    if (taken_.insert(name).second) return name;
  }
  throw std::runtime_error("identifier space exhausted");
}

}  // namespace vdl::obf
