#pragma once

#include <map>
#include <memory>
#include <string>

#include "solcheck/group.hpp"
#include "solcheck/solubilizer.hpp"

namespace solcheck::testing {

// Groups are expensive to enumerate; share one instance per spec within a
// test binary.
inline std::shared_ptr<const Group> testGroup(const std::string& spec) {
  static std::map<std::string, std::shared_ptr<const Group>> cache;
  auto it = cache.find(spec);
  if (it != cache.end()) return it->second;
  auto g = Group::build(spec);
  cache.emplace(spec, g);
  return g;
}

// Class records are the expensive part of most checks; share one lazily
// filled SolubilizerSet per (spec, mode) within a test binary.
inline SolubilizerSet& testSet(const std::string& spec, SolMode mode) {
  static std::map<std::pair<std::string, int>, std::unique_ptr<SolubilizerSet>> cache;
  auto key = std::make_pair(spec, static_cast<int>(mode));
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<SolubilizerSet>(testGroup(spec), mode)).first;
  return *it->second;
}

}  // namespace solcheck::testing
