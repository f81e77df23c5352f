#pragma once

#include <string>
#include <vector>

#include "vdl/js/ast.hpp"
#include "vdl/obf/rng.hpp"
#include "vdl/obf/technique.hpp"

namespace vdl::obf {

struct StringArrayTable {
  std::string name;
  std::string decoder;
  std::vector<std::string> entries;
  int shift = 0;
};

/// Runs the effective techniques of `config` in pipeline order. Each pass
/// draws from its own stream seeded by (config.seed, technique index).
js::NodePtr apply(const js::Node& program, const ObfuscationConfig& config);

js::NodePtr tf_compact(const js::Node& program);
js::NodePtr tf_flatten(const js::Node& program, Rng& rng, const ObfuscationParams& params = {});
js::NodePtr tf_dead_code(const js::Node& program, Rng& rng, const ObfuscationParams& params = {});
js::NodePtr tf_debug_protection(const js::Node& program);
js::NodePtr tf_simplify(const js::Node& program);
js::NodePtr tf_split_strings(const js::Node& program, Rng& rng, const ObfuscationParams& params = {});
js::NodePtr tf_string_array(const js::Node& program, Rng& rng, const ObfuscationParams& params = {},
                            StringArrayTable* table = nullptr);
/// Throws TransformError unless `cmp_follows` (CMP is in the effective config).
js::NodePtr tf_self_defending(const js::Node& program, Rng& rng, bool cmp_follows);

/// Expression over a seeded constant that always evaluates to `truth`.
js::NodePtr make_opaque_predicate(Rng& rng, bool truth);

/// Rewrites dot members `o.p` as `o["p"]` so data passes can reach property
/// names. Used by SS and SA.
void literalize_members(js::Node& root);

/// The regex used by the self-defending guard.
inline constexpr const char* kSelfDefendPattern = "^([^\\n]+)+$";

}  // namespace vdl::obf
