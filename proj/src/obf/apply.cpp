#include "vdl/obf/obfuscate.hpp"

namespace vdl::obf {

js::NodePtr apply(const js::Node& program, const ObfuscationConfig& config) {
  config.params.validate();
  const TechniqueSet effective = config.effective();
  js::NodePtr cur = program.clone();
  for (Technique t : kPipelineOrder) {
    if (!effective.count(t)) continue;
    Rng rng(derive_seed(config.seed, technique_index(t)));
    switch (t) {
      case Technique::SIMP: cur = tf_simplify(*cur); break;
      case Technique::CFF: cur = tf_flatten(*cur, rng, config.params); break;
      case Technique::DCI: cur = tf_dead_code(*cur, rng, config.params); break;
      case Technique::SS: cur = tf_split_strings(*cur, rng, config.params); break;
      case Technique::SA: cur = tf_string_array(*cur, rng, config.params); break;
      case Technique::DP: cur = tf_debug_protection(*cur); break;
      case Technique::SD: cur = tf_self_defending(*cur, rng, effective.count(Technique::CMP) > 0); break;
      case Technique::CMP: cur = tf_compact(*cur); break;
    }
  }
  return cur;
}

}  // namespace vdl::obf
