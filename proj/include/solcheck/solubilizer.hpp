#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "solcheck/group.hpp"
#include "solcheck/index_set.hpp"
#include "solcheck/rational.hpp"
#include "solcheck/subgroup.hpp"

namespace solcheck {

struct SolubilizerRecord {
  int classIndex = 0;
  std::uint32_t representative = 0;
  int elementOrder = 1;
  long long classSize = 0;
  long long normalizerOrder = 0;
  IndexSet members;  // Sol_G(rep) as element indices
  long long size = 0;
  Rational probability;    // size / |G|
  bool isSubgroup = false;
  bool isSoluble = false;  // meaningful only when isSubgroup
};

enum class SizeClass { P, PSquared, OddPrimePower, PowerOfTwo, None };
SizeClass classifySize(long long n);
std::string sizeClassName(SizeClass c);

// Per-class solubilizer computation. Records are computed once per class on
// demand; the scan over y parallelizes in chunks whose merged result is
// scheduling-independent.
class SolubilizerSet {
 public:
  SolubilizerSet(std::shared_ptr<const Group> g, SolMode mode, int threads = 1);

  const Group& group() const { return *g_; }
  SolMode mode() const { return mode_; }

  const SolubilizerRecord& record(int classIndex);
  const std::vector<SolubilizerRecord>& all();

  // Sol of an arbitrary element, by conjugating its class record.
  IndexSet membersOf(std::uint32_t element);

  bool computed(int classIndex) const { return computed_[classIndex]; }

 private:
  void compute(int classIndex);

  std::shared_ptr<const Group> g_;
  SolMode mode_;
  int threads_;
  std::vector<SolubilizerRecord> records_;
  std::vector<bool> computed_;
};

struct AxiomReport {
  bool ok = true;
  std::vector<std::string> violations;
  void fail(std::string msg) {
    ok = false;
    violations.push_back(std::move(msg));
  }
};

// Order-divides-size, normalizer containment, symmetry across class
// representatives, subgroup records being maximal soluble, and the presence
// of at least one non-subgroup class.
AxiomReport verifySolubilizerAxioms(SolubilizerSet& set);

// Recompute Sol directly for k seeded random members per class and compare
// with the conjugated record.
AxiomReport spotCheckConjugation(SolubilizerSet& set, int perClass, std::uint64_t seed);

struct ConjectureReport {
  bool ok = true;
  std::vector<std::string> violations;
  std::vector<std::string> notes;
};

// Scans over computed records (identity class excluded):
//   |N_G(<x>)| divides |Sol_G(x)|;
//   |Sol_G(x)| is never p, p^2, or an odd prime power;
//   probability <= 3/5, equality only for psl2:4 involutions;
//   probability < 1/2 for non-involutions.
ConjectureReport scanConjectures(SolubilizerSet& set);

}  // namespace solcheck
