#include "dltag/features.h"

namespace dltag {

UnifyResult unify_features(const FeatureMap& a, const FeatureMap& b) {
  FeatureMap out = a;
  for (const auto& [key, value] : b) {
    auto [it, inserted] = out.emplace(key, value);
    if (!inserted && it->second != value) {
      return FeatureConflict{key, it->second, value};
    }
  }
  return out;
}

}  // namespace dltag
