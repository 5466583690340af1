#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "solcheck/group.hpp"
#include "solcheck/index_set.hpp"

namespace solcheck {

struct ClosureResult {
  IndexSet members;
  std::vector<std::uint32_t> elements;  // discovery order
  bool completed = true;                // false when the abort threshold tripped
};

// Breadth-first Cayley closure from the identity; aborts (completed=false)
// as soon as the member count exceeds abortThreshold.
ClosureResult closure(const Group& g, const std::vector<std::uint32_t>& generators,
                      long long abortThreshold);

// Greedy generating set for a subgroup given as an explicit member list.
std::vector<std::uint32_t> smallGeneratingSet(const Group& g,
                                              const std::vector<std::uint32_t>& members);

struct DerivedResult {
  bool soluble = false;
  int derivedLength = -1;  // -1 marks insoluble
};

// Derived series by commutator closure. All member pairs are used for
// subgroups of order <= 2048; above that, the derived subgroup is the normal
// closure of the generator commutators (with a sampled verification sweep).
DerivedResult derivedSeries(const Group& g, const std::vector<std::uint32_t>& members);

struct Fingerprint {
  long long order = 0;
  std::vector<std::pair<int, long long>> orderHistogram;  // (element order, count)
  bool abelian = false;
  int derivedLength = -1;

  bool operator==(const Fingerprint& o) const;
  bool operator<(const Fingerprint& o) const;
  std::string str() const;
};

Fingerprint fingerprintOf(const Group& g, const std::vector<std::uint32_t>& members);

enum class SolMode { Shortcut, General };

// Largest proper subgroup order for the groups where every proper subgroup is
// soluble; the shortcut solubility test aborts closures past this bound.
long long properSubgroupBound(const GroupSpec& spec);

// Whole-group insolubility, cached per group instance; the general-mode
// pair test relies on it to classify aborted closures.
bool groupIsInsoluble(const Group& g);

// Pair-solubility engine with x fixed: keeps a right-multiplication table for
// x, discovered soluble overgroups for pruning, and (general mode) a verdict
// cache keyed by exact subgroup member lists.
class PairSolubility {
 public:
  PairSolubility(const Group& g, std::uint32_t x, SolMode mode);

  bool soluble(std::uint32_t y);
  const Group& group() const { return g_; }
  std::uint32_t x() const { return x_; }
  SolMode mode() const { return mode_; }

 private:
  bool closurePair(std::uint32_t y, long long bound, ClosureResult& out) const;
  bool subgroupSoluble(ClosureResult& h);

  const Group& g_;
  std::uint32_t x_;
  SolMode mode_;
  long long bound_;
  std::vector<std::uint32_t> mulByX_;
  std::vector<IndexSet> solubleOvergroups_;
  std::unordered_map<std::uint64_t, std::vector<std::pair<std::vector<std::uint32_t>, bool>>>
      verdicts_;

  friend bool isPairSoluble(const Group&, std::uint32_t, std::uint32_t, SolMode);
};

bool isPairSoluble(const Group& g, std::uint32_t x, std::uint32_t y, SolMode mode);

// All subgroups maximal under inclusion among soluble subgroups containing x.
// Complete by construction: every soluble overgroup of x sits inside
// Sol_G(x), and the lattice of such subgroups is walked exhaustively through
// single-element extensions starting from <x>. Sorted by order then members;
// their union is exactly solMembers.
std::vector<std::vector<std::uint32_t>> maximalSolubleOvergroups(
    const Group& g, std::uint32_t x, SolMode mode, const IndexSet& solMembers);

// Fingerprint tally of all pairwise intersections of the given subgroups.
std::map<Fingerprint, int> intersectionTally(
    const Group& g, const std::vector<std::vector<std::uint32_t>>& overgroups);

}  // namespace solcheck
