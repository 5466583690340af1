#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "solcheck/group.hpp"
#include "solcheck/solubilizer.hpp"
#include "solcheck/subgroup.hpp"

namespace solcheck {

// Column selector for the closed-form classification tables.
enum class OrderClass {
  Identity,
  Invol,       // |x| = 2
  Ord3,
  Ord4,
  Ord6,
  Ord8,
  Ord13,
  OrdChar,     // |x| = p in psl2:p
  DivQm1,      // |x| divides q-1 (resp. p-1), not a dedicated column
  DivQp1,      // |x| divides q+1 (resp. p+1), not a dedicated column
  DivSzPlus,   // |x| divides q + sqrt(2q) + 1
  DivSzMinus,  // |x| divides q - sqrt(2q) + 1
};
std::string orderClassName(OrderClass c);

struct CaseKey {
  Family family;
  long long parameter = 0;        // q or p
  int residueMod24 = 0;           // psl2 prime case only
  OrderClass orderClass = OrderClass::Identity;
  long long normalizerOrder = 0;  // disambiguates the two order-3 psl3:3 columns
};

struct MaximalRow {
  std::string label;
  long long subgroupOrder = 0;
  long long count = 0;
};

// Allowed isomorphism shapes for pairwise intersections of the maximal
// overgroups in a column.
struct IntersectionShape {
  long long order = 0;
  enum Kind { Cyclic, Klein } kind = Cyclic;
};

struct CaseProfile {
  CaseKey key;
  long long solSize = 0;
  std::vector<MaximalRow> maximalRows;        // zero-count rows omitted
  bool hasIntersectionRule = false;
  std::vector<IntersectionShape> intersectionShapes;
};

struct Coverage {
  bool covered = false;
  std::string reason;  // set when not covered
};

// The closed forms cover exactly the minimal simple families.
Coverage coverageOf(const GroupSpec& spec);

// Routes a class to its table column and evaluates the closed forms.
// Throws std::invalid_argument when the group is not covered.
CaseProfile classifyCase(const Group& g, const SolubilizerRecord& rec);

// Evaluates the closed forms for an explicit key (classifyCase = routing +
// this). Usable for parameters past the enumeration cap, where the formulas
// can still be evaluated even though no group is built.
CaseProfile profileFor(const CaseKey& key);

// m elements of the relevant order per subgroup copy, r copies, n elements of
// that order in G; returns m*r/n, errors unless n divides m*r.
long long countingLemma(long long m, long long r, long long n);

// p = 7 drops two dihedral rows to non-maximal; count mismatches there are
// warnings, size mismatches stay fatal.
bool smallParameterGroup(const GroupSpec& spec);

struct TableCheck {
  bool covered = false;
  bool sizeMatch = false;
  bool countsMatch = false;
  bool countsWarnedOnly = false;  // counts mismatched but downgraded
  bool intersectionsMatch = true;
  std::vector<std::string> notes;
  long long expectedSize = 0;
  bool ok() const {
    return covered && sizeMatch && (countsMatch || countsWarnedOnly) && intersectionsMatch;
  }
};

// Compares a record (and its computed maximal overgroups) against the
// profile: exact size, (order -> count) multiset of overgroups, and the
// intersection shape rule when the column has one.
TableCheck verifyMaximalCounts(const Group& g, const SolubilizerRecord& rec,
                               const std::vector<std::vector<std::uint32_t>>& overgroups);

struct InvolutionIdentity {
  bool applicable = false;  // needs a single conjugacy class of involutions
  long long lhs = 0;        // |Sol(t)| * #involutions
  long long rhs = 0;        // sum over G of #involutions in Sol(y)
  bool holds = false;
};
InvolutionIdentity involutionIdentityCheck(SolubilizerSet& set);

// Expected pairwise-intersection tallies for psl3:3, one entry per class
// column, keyed inside each case by intersection order (orders are unique
// within a case).
struct AppendixExpectation {
  int elementOrder = 0;
  long long normalizerOrder = 0;
  std::vector<std::pair<long long, int>> tallyByOrder;
};
const std::vector<AppendixExpectation>& appendixExpectations();

struct AppendixCheck {
  bool applicable = false;
  bool ok = false;
  std::vector<std::string> notes;
};
AppendixCheck verifyAppendixCase(const Group& g, const SolubilizerRecord& rec,
                                 const std::map<Fingerprint, int>& tally);

}  // namespace solcheck
