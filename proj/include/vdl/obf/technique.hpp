#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vdl/js/ast.hpp"

namespace vdl::obf {

/// The eight obfuscation techniques, declared in catalogue order. The
/// declaration order doubles as the technique index used to derive per-pass
/// RNG streams.
enum class Technique { CMP, CFF, DCI, DP, SIMP, SA, SD, SS };

enum class Category { Layout, Control, Preventive, Data };

inline constexpr std::array<Technique, 8> kAllTechniques = {
    Technique::CMP, Technique::CFF, Technique::DCI, Technique::DP,
    Technique::SIMP, Technique::SA, Technique::SD, Technique::SS,
};

/// Order in which apply() runs the passes.
inline constexpr std::array<Technique, 8> kPipelineOrder = {
    Technique::SIMP, Technique::CFF, Technique::DCI, Technique::SS,
    Technique::SA, Technique::DP, Technique::SD, Technique::CMP,
};

std::string_view acronym(Technique t);
std::string_view display_name(Technique t);
std::string_view category_name(Category c);
Category category(Technique t);
int technique_index(Technique t);
std::optional<Technique> parse_technique(std::string_view acronym);

/// Orders techniques by acronym, the ordering used for labels and enumeration.
struct ByAcronym {
  bool operator()(Technique a, Technique b) const { return acronym(a) < acronym(b); }
};
using TechniqueSet = std::set<Technique, ByAcronym>;

std::string join_acronyms(const TechniqueSet& set, std::string_view sep = "+");

struct ObfuscationParams {
  int ss_chunk_len = 4;
  double dci_ratio = 0.3;
  int cff_min_stmts = 2;
  int sa_index_shift = 0;

  void validate() const;  // throws std::invalid_argument
};

struct ObfuscationConfig {
  TechniqueSet techniques;
  std::uint64_t seed = 0;
  ObfuscationParams params;

  /// Requested techniques plus CMP whenever SD is present.
  TechniqueSet effective() const;
  /// Stacking depth after the implied-CMP expansion.
  int plugin_count() const { return static_cast<int>(effective().size()); }
  /// "CFF+SA+SS_s7"; the empty set labels the baseline.
  std::string label() const;
  std::string acronyms() const { return join_acronyms(techniques); }
};

class TransformError : public std::runtime_error {
 public:
  TransformError(Technique t, const std::string& what, js::SourceSpan span = {})
      : std::runtime_error(std::string(acronym(t)) + ": " + what), technique_(t), span_(span) {}
  Technique technique() const noexcept { return technique_; }
  const js::SourceSpan& span() const noexcept { return span_; }

 private:
  Technique technique_;
  js::SourceSpan span_;
};

enum class EnumerationMode { Singles, AllCombinations, ByCount };

class InvalidMode : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Configurations over `techniques` in lexicographic acronym order. `k` is
/// only consulted for ByCount and must lie in [1, 8].
std::vector<ObfuscationConfig> enumerate_configs(const TechniqueSet& techniques, EnumerationMode mode,
                                                 int k, std::uint64_t seed,
                                                 const ObfuscationParams& params = {});

TechniqueSet all_techniques();

}  // namespace vdl::obf
