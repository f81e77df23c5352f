#include "vdl/obf/technique.hpp"

#include <algorithm>

namespace vdl::obf {

std::string_view acronym(Technique t) {
  switch (t) {
    case Technique::CMP: return "CMP";
    case Technique::CFF: return "CFF";
    case Technique::DCI: return "DCI";
    case Technique::DP: return "DP";
    case Technique::SIMP: return "SIMP";
    case Technique::SA: return "SA";
    case Technique::SD: return "SD";
    case Technique::SS: return "SS";
  }
  return "?";
}

std::string_view display_name(Technique t) {
  switch (t) {
    case Technique::CMP: return "Compact";
    case Technique::CFF: return "Control Flow Flattening";
    case Technique::DCI: return "Dead Code Injection";
    case Technique::DP: return "Debug Protection";
    case Technique::SIMP: return "Simplify";
    case Technique::SA: return "String Array";
    case Technique::SD: return "Self Defending";
    case Technique::SS: return "Split Strings";
  }
  return "?";
}

Category category(Technique t) {
  switch (t) {
    case Technique::CMP:
    case Technique::SIMP: return Category::Layout;
    case Technique::CFF:
    case Technique::DCI: return Category::Control;
    case Technique::DP:
    case Technique::SD: return Category::Preventive;
    case Technique::SA:
    case Technique::SS: return Category::Data;
  }
  return Category::Layout;
}

std::string_view category_name(Category c) {
  switch (c) {
    case Category::Layout: return "Layout";
    case Category::Control: return "Control";
    case Category::Preventive: return "Preventive";
    case Category::Data: return "Data";
  }
  return "?";
}

int technique_index(Technique t) { return static_cast<int>(t); }

std::optional<Technique> parse_technique(std::string_view s) {
  for (Technique t : kAllTechniques)
    if (acronym(t) == s) return t;
  return std::nullopt;
}

std::string join_acronyms(const TechniqueSet& set, std::string_view sep) {
  std::string out;
  for (Technique t : set) {
    if (!out.empty()) out += sep;
    out += acronym(t);
  }
  return out;
}

TechniqueSet all_techniques() { return TechniqueSet(kAllTechniques.begin(), kAllTechniques.end()); }

void ObfuscationParams::validate() const {
  if (ss_chunk_len < 1) throw std::invalid_argument("ss_chunk_len must be a positive integer");
  if (!(dci_ratio >= 0.0 && dci_ratio <= 1.0)) throw std::invalid_argument("dci_ratio must lie in [0, 1]");
  if (cff_min_stmts < 1) throw std::invalid_argument("cff_min_stmts must be a positive integer");
  if (sa_index_shift < 0) throw std::invalid_argument("sa_index_shift must be non-negative");
}

TechniqueSet ObfuscationConfig::effective() const {
  TechniqueSet out = techniques;
  if (out.count(Technique::SD)) out.insert(Technique::CMP);
  return out;
}

std::string ObfuscationConfig::label() const {
  std::string base = techniques.empty() ? "baseline" : join_acronyms(techniques);
  return base + "_s" + std::to_string(seed);
}

std::vector<ObfuscationConfig> enumerate_configs(const TechniqueSet& techniques, EnumerationMode mode,
                                                 int k, std::uint64_t seed,
                                                 const ObfuscationParams& params) {
  if (mode == EnumerationMode::ByCount && (k < 1 || k > 8))
    throw InvalidMode("by_count requires k in [1, 8], got " + std::to_string(k));
  std::vector<Technique> items(techniques.begin(), techniques.end());
  const std::size_t n = items.size();
  std::vector<std::vector<Technique>> subsets;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int bits = std::popcount(mask);
    if (mode == EnumerationMode::Singles && bits != 1) continue;
    if (mode == EnumerationMode::ByCount && bits != k) continue;
    std::vector<Technique> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(items[i]);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), ByAcronym{});
  });
  std::vector<ObfuscationConfig> out;
  out.reserve(subsets.size());
  for (auto& s : subsets) {
    ObfuscationConfig c;
    c.techniques = TechniqueSet(s.begin(), s.end());
    c.seed = seed;
    c.params = params;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace vdl::obf
