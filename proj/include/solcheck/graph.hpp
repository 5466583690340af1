#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "solcheck/group.hpp"
#include "solcheck/rng.hpp"
#include "solcheck/solubilizer.hpp"

namespace solcheck {

// Solubility graph on the non-identity elements: u ~ v iff <u,v> is soluble.
// Vertices follow the element order with the identity removed, so vertex v
// is element index v+1 when the graph came from a group.
class SolubilityGraph {
 public:
  SolubilityGraph() = default;
  explicit SolubilityGraph(std::size_t n);

  std::size_t vertexCount() const { return n_; }
  bool adjacent(std::size_t u, std::size_t v) const {
    return (rows_[u * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  void addEdge(std::size_t u, std::size_t v);
  void setDirected(std::size_t u, std::size_t v) {
    rows_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  }

  const std::uint64_t* row(std::size_t u) const { return rows_.data() + u * words_; }
  std::size_t rowWords() const { return words_; }

  long long degree(std::size_t u) const;
  long long edgeCount() const;
  long long maxDegree() const;

  // empty when the graph was imported rather than built from a group
  std::vector<std::uint32_t> vertexElement;

  // first (u,v) with asymmetric adjacency, if any
  std::optional<std::pair<std::size_t, std::size_t>> symmetryViolation() const;
  bool connected() const;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

// Builds the graph from per-class records via conjugation; computes every
// class record first. Memory is n^2 bits.
SolubilityGraph buildGraph(SolubilizerSet& set);

struct EulerianVerdict {
  bool eulerian = false;
  int witnessClass = -1;  // class with odd |Sol| when not Eulerian
  long long witnessSolSize = 0;
};
// Degree of v is |Sol(v)| - 2, so the graph is Eulerian iff every class
// solubilizer has even size (the identity class is |G|, always even here).
EulerianVerdict eulerianCheck(SolubilizerSet& set);

enum class ColorOrder { Canonical, DegreeDescending, SeededRandom };
std::string colorOrderName(ColorOrder o);

struct ColoringResult {
  std::vector<int> colors;  // per vertex, 0-based
  int colorCount = 0;
  ColorOrder order = ColorOrder::Canonical;
  std::uint64_t seed = 0;
  // Max degree (Brooks-style cap; a complete graph legitimately exceeds it
  // by one). The certified clique lower bound comes from cliqueLowerBound
  // and is attached by whoever reports the bracketing statement.
  long long upperBoundBrooks = 0;
  long long lowerBound = 0;
};
ColoringResult greedyColoring(const SolubilityGraph& g, ColorOrder order,
                              std::uint64_t seed = 0);
bool coloringIsProper(const SolubilityGraph& g, const std::vector<int>& colors);

struct CliqueBound {
  long long bound = 0;
  std::string witness;                         // what the clique is
  std::vector<std::uint32_t> witnessVertices;  // vertex ids, size == bound
  bool verified = false;  // witness set checked pairwise-adjacent in the graph
};
// max(#involutions, largest computed soluble overgroup order - 1); the
// witness clique is verified in the graph when one is supplied.
CliqueBound cliqueLowerBound(SolubilizerSet& set, const SolubilityGraph* graph);
// Degenerate fallback for imported graphs with no group attached: greedily
// grown clique from the lowest vertex (a single vertex is a 1-clique).
CliqueBound cliqueLowerBound(const SolubilityGraph& g);

struct HamiltonianResult {
  bool found = false;
  std::vector<std::uint32_t> cycle;  // vertex ids, closed implicitly
  std::uint64_t seed = 0;
  long long restartsUsed = 0;
};
// Seeded greedy-random walk: step to the unvisited neighbor with the fewest
// remaining unvisited neighbors, random tie-break, restart on dead ends.
HamiltonianResult hamiltonianSearch(const SolubilityGraph& g, std::uint64_t seed,
                                    long long maxRestarts = 1000);
bool validateCycle(const SolubilityGraph& g, const std::vector<std::uint32_t>& cycle);

struct BottleneckReport {
  bool applicable = false;     // psl2 with odd q only
  bool confinementHolds = false;
  long long involutions = 0;
  long long petals = 0;        // distinct Sol sets of size q+1
  bool bottleneck = false;     // involutions < petals + 1 with confinement
  std::string detail;
};
// Counts the dihedral "petals" (classes of order dividing q+1, order > 2,
// with |Sol| = q+1), verifies every neighbor of a petal vertex is an
// involution or lies in the same petal, and compares petals to involutions.
BottleneckReport dihedralBottleneckCheck(SolubilizerSet& set);

struct FullGraphFacts {
  long long chromaticLowerBound = 0;  // delta bound + 1
  long long chromaticUpperBound = 0;
  bool eulerian = false;              // never: the identity vertex has odd degree
  bool hamiltonianIfDeltaIs = true;
};
FullGraphFacts fullGraphFacts(long long deltaLower, long long deltaUpper);

}  // namespace solcheck
