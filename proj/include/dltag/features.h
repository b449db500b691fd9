#pragma once

#include <map>
#include <string>
#include <variant>

namespace dltag {

// Flat attribute-value map attached to every node. Ordered so that
// serialization is byte-stable.
using FeatureMap = std::map<std::string, std::string>;

struct FeatureConflict {
  std::string key;
  std::string left;
  std::string right;

  bool operator==(const FeatureConflict&) const = default;
};

using UnifyResult = std::variant<FeatureMap, FeatureConflict>;

// Union of the two maps; fails on the first (lexicographically smallest) key
// bound to different values.
UnifyResult unify_features(const FeatureMap& a, const FeatureMap& b);

inline bool unifies(const UnifyResult& r) {
  return std::holds_alternative<FeatureMap>(r);
}

}  // namespace dltag
