#include "solcheck/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "solcheck/subgroup.hpp"

namespace solcheck {

SolubilityGraph::SolubilityGraph(std::size_t n)
    : n_(n), words_((n + 63) / 64), rows_(n * words_, 0) {}

void SolubilityGraph::addEdge(std::size_t u, std::size_t v) {
  setDirected(u, v);
  setDirected(v, u);
}

long long SolubilityGraph::degree(std::size_t u) const {
  long long c = 0;
  const std::uint64_t* r = row(u);
  for (std::size_t w = 0; w < words_; ++w) c += std::popcount(r[w]);
  return c;
}

long long SolubilityGraph::edgeCount() const {
  long long total = 0;
  for (std::size_t u = 0; u < n_; ++u) total += degree(u);
  return total / 2;
}

long long SolubilityGraph::maxDegree() const {
  long long best = 0;
  for (std::size_t u = 0; u < n_; ++u) best = std::max(best, degree(u));
  return best;
}

std::optional<std::pair<std::size_t, std::size_t>> SolubilityGraph::symmetryViolation()
    const {
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = u + 1; v < n_; ++v)
      if (adjacent(u, v) != adjacent(v, u)) return std::make_pair(u, v);
  return std::nullopt;
}

bool SolubilityGraph::connected() const {
  if (n_ == 0) return true;
  std::vector<std::uint64_t> visited(words_, 0);
  std::vector<std::uint32_t> stack{0};
  visited[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::uint32_t u = stack.back();
    stack.pop_back();
    const std::uint64_t* r = row(u);
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t fresh = r[w] & ~visited[w];
      visited[w] |= fresh;
      while (fresh) {
        unsigned b = std::countr_zero(fresh);
        stack.push_back(static_cast<std::uint32_t>((w << 6) + b));
        ++reached;
        fresh &= fresh - 1;
      }
    }
  }
  return reached == n_;
}

SolubilityGraph buildGraph(SolubilizerSet& set) {
  const Group& g = set.group();
  auto n = static_cast<std::size_t>(g.order() - 1);
  SolubilityGraph graph(n);
  graph.vertexElement.resize(n);
  for (std::size_t v = 0; v < n; ++v)
    graph.vertexElement[v] = static_cast<std::uint32_t>(v + 1);
  for (std::size_t c = 0; c < g.classes().size(); ++c) {
    const auto& cls = g.classes()[c];
    if (cls.elementOrder == 1) continue;  // the identity is not a vertex
    set.record(static_cast<int>(c));
    for (std::uint32_t x : cls.members) {
      IndexSet sol = set.membersOf(x);
      for (std::uint32_t m : sol.toVector())
        if (m != 0 && m != x) graph.setDirected(x - 1, m - 1);
    }
  }
  return graph;
}

EulerianVerdict eulerianCheck(SolubilizerSet& set) {
  EulerianVerdict verdict;
  verdict.eulerian = true;
  for (const auto& rec : set.all()) {
    if (rec.size % 2 != 0) {
      verdict.eulerian = false;
      verdict.witnessClass = rec.classIndex;
      verdict.witnessSolSize = rec.size;
      break;
    }
  }
  return verdict;
}

std::string colorOrderName(ColorOrder o) {
  switch (o) {
    case ColorOrder::Canonical: return "canonical";
    case ColorOrder::DegreeDescending: return "degree-descending";
    case ColorOrder::SeededRandom: return "seeded-random";
  }
  return "unknown";
}

ColoringResult greedyColoring(const SolubilityGraph& g, ColorOrder order,
                              std::uint64_t seed) {
  const std::size_t n = g.vertexCount();
  const std::size_t words = g.rowWords();
  ColoringResult result;
  result.order = order;
  result.seed = seed;
  result.upperBoundBrooks = g.maxDegree();
  result.colors.assign(n, -1);

  std::vector<std::uint32_t> sequence(n);
  std::iota(sequence.begin(), sequence.end(), 0);
  if (order == ColorOrder::DegreeDescending) {
    std::stable_sort(sequence.begin(), sequence.end(),
                     [&g](std::uint32_t a, std::uint32_t b) {
                       return g.degree(a) > g.degree(b);
                     });
  } else if (order == ColorOrder::SeededRandom) {
    XorShift64 rng(seed);
    for (std::size_t i = n; i > 1; --i) {
      auto j = static_cast<std::size_t>(rng.below(i));
      std::swap(sequence[i - 1], sequence[j]);
    }
  }

  std::vector<char> used;
  int maxColor = -1;
  for (std::uint32_t v : sequence) {
    used.assign(static_cast<std::size_t>(maxColor) + 2, 0);
    const std::uint64_t* r = g.row(v);
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        unsigned b = std::countr_zero(bits);
        int c = result.colors[(w << 6) + b];
        if (c >= 0) used[c] = 1;
        bits &= bits - 1;
      }
    }
    int c = 0;
    while (used[c]) ++c;
    result.colors[v] = c;
    maxColor = std::max(maxColor, c);
  }
  result.colorCount = maxColor + 1;
  return result;
}

bool coloringIsProper(const SolubilityGraph& g, const std::vector<int>& colors) {
  if (colors.size() != g.vertexCount()) return false;
  for (int c : colors)
    if (c < 0) return false;
  for (std::size_t u = 0; u < g.vertexCount(); ++u)
    for (std::size_t v = u + 1; v < g.vertexCount(); ++v)
      if (g.adjacent(u, v) && colors[u] == colors[v]) return false;
  return true;
}

namespace {

bool verifyClique(const SolubilityGraph& g, const std::vector<std::uint32_t>& vertices,
                  long long bound) {
  if (static_cast<long long>(vertices.size()) != bound) return false;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.vertexCount()) return false;
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!g.adjacent(vertices[i], vertices[j])) return false;
  }
  return true;
}

}  // namespace

CliqueBound cliqueLowerBound(SolubilizerSet& set, const SolubilityGraph* graph) {
  const Group& g = set.group();
  CliqueBound out;

  // the largest soluble overgroup discovered across the class representatives
  long long bestOrder = 0;
  std::vector<std::uint32_t> bestMembers;
  for (std::size_t c = 0; c < g.classes().size(); ++c) {
    if (g.classes()[c].elementOrder == 1) continue;
    const auto& rec = set.record(static_cast<int>(c));
    auto overgroups =
        maximalSolubleOvergroups(g, rec.representative, set.mode(), rec.members);
    for (const auto& h : overgroups)
      if (static_cast<long long>(h.size()) > bestOrder) {
        bestOrder = static_cast<long long>(h.size());
        bestMembers = h;
      }
  }

  long long involutions = g.involutionCount();
  if (involutions >= bestOrder - 1) {
    out.bound = std::max<long long>(involutions, 1);
    if (involutions == 0) {
      out.witness = "single vertex";
      out.witnessVertices.push_back(0);
    } else {
      out.witness = "the " + std::to_string(involutions) + " involutions";
      for (std::uint32_t e = 1; e < g.order(); ++e)
        if (g.elementOrder(e) == 2) out.witnessVertices.push_back(e - 1);
    }
  } else {
    out.bound = bestOrder - 1;
    out.witness = "a soluble subgroup of order " + std::to_string(bestOrder) +
                  " minus the identity";
    for (std::uint32_t m : bestMembers)
      if (m != 0) out.witnessVertices.push_back(m - 1);
    std::sort(out.witnessVertices.begin(), out.witnessVertices.end());
  }

  if (graph != nullptr) out.verified = verifyClique(*graph, out.witnessVertices, out.bound);
  return out;
}

CliqueBound cliqueLowerBound(const SolubilityGraph& g) {
  CliqueBound out;
  if (g.vertexCount() == 0) return out;
  std::vector<std::uint32_t> clique{0};
  for (std::size_t v = 1; v < g.vertexCount(); ++v) {
    bool joins = true;
    for (std::uint32_t u : clique)
      if (!g.adjacent(u, v)) {
        joins = false;
        break;
      }
    if (joins) clique.push_back(static_cast<std::uint32_t>(v));
  }
  out.bound = static_cast<long long>(clique.size());
  out.witnessVertices = std::move(clique);
  out.witness = "greedy clique grown from the first vertex";
  out.verified = verifyClique(g, out.witnessVertices, out.bound);
  return out;
}

HamiltonianResult hamiltonianSearch(const SolubilityGraph& g, std::uint64_t seed,
                                    long long maxRestarts) {
  HamiltonianResult result;
  result.seed = seed;
  const std::size_t n = g.vertexCount();
  const std::size_t words = g.rowWords();
  if (n == 0 || maxRestarts <= 0) return result;

  XorShift64 rng(seed);
  std::vector<std::uint64_t> visited(words);
  std::vector<std::uint32_t> path;
  path.reserve(n);
  std::vector<std::uint32_t> ties;

  for (long long attempt = 0; attempt < maxRestarts; ++attempt) {
    std::fill(visited.begin(), visited.end(), 0);
    path.clear();
    auto cur = static_cast<std::uint32_t>(rng.below(n));
    visited[cur >> 6] |= std::uint64_t{1} << (cur & 63);
    path.push_back(cur);

    while (path.size() < n) {
      // unvisited neighbor with the fewest remaining unvisited neighbors
      long long fewest = std::numeric_limits<long long>::max();
      ties.clear();
      const std::uint64_t* r = g.row(cur);
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t bits = r[w] & ~visited[w];
        while (bits) {
          unsigned b = std::countr_zero(bits);
          auto u = static_cast<std::uint32_t>((w << 6) + b);
          long long remaining = 0;
          const std::uint64_t* ru = g.row(u);
          for (std::size_t w2 = 0; w2 < words; ++w2)
            remaining += std::popcount(ru[w2] & ~visited[w2]);
          if (remaining < fewest) {
            fewest = remaining;
            ties.clear();
            ties.push_back(u);
          } else if (remaining == fewest) {
            ties.push_back(u);
          }
          bits &= bits - 1;
        }
      }
      if (ties.empty()) break;  // dead end, restart
      std::uint32_t next =
          ties.size() == 1
              ? ties[0]
              : ties[static_cast<std::size_t>(rng.below(ties.size()))];
      visited[next >> 6] |= std::uint64_t{1} << (next & 63);
      path.push_back(next);
      cur = next;
    }

    if (path.size() == n && g.adjacent(path.back(), path.front()) &&
        validateCycle(g, path)) {
      result.found = true;
      result.cycle = path;
      result.restartsUsed = attempt;
      return result;
    }
  }
  result.restartsUsed = maxRestarts;
  return result;
}

bool validateCycle(const SolubilityGraph& g, const std::vector<std::uint32_t>& cycle) {
  const std::size_t n = g.vertexCount();
  if (n == 0 || cycle.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (std::uint32_t v : cycle) {
    if (v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!g.adjacent(cycle[i], cycle[(i + 1) % n])) return false;
  return true;
}

BottleneckReport dihedralBottleneckCheck(SolubilizerSet& set) {
  BottleneckReport report;
  const Group& g = set.group();
  const GroupSpec& spec = g.spec();
  if (spec.family != Family::Psl2 || spec.fieldOrder % 2 == 0) {
    report.detail =
        "the counting argument needs the odd-characteristic two-dimensional family";
    return report;
  }
  report.applicable = true;
  const long long q = spec.fieldOrder;
  report.involutions = g.involutionCount();
  report.confinementHolds = true;

  std::ostringstream notes;
  std::set<std::vector<std::uint64_t>> petalSets;
  for (std::size_t c = 0; c < g.classes().size(); ++c) {
    const auto& cls = g.classes()[c];
    if (cls.elementOrder <= 2 || (q + 1) % cls.elementOrder != 0) continue;
    const auto& rec = set.record(static_cast<int>(c));
    if (rec.size != q + 1) {
      report.confinementHolds = false;
      notes << "order-" << cls.elementOrder << " class has |Sol| = " << rec.size
            << ", not " << (q + 1) << "; ";
      continue;
    }
    // every non-involution member of the petal must be confined to the same
    // petal (checked on the representative; conjugation carries it over)
    for (std::uint32_t y : rec.members.toVector()) {
      if (y == 0 || y == rec.representative || g.elementOrder(y) == 2) continue;
      if (!(set.membersOf(y) == rec.members)) {
        report.confinementHolds = false;
        notes << "order-" << cls.elementOrder
              << " petal has a member of order " << g.elementOrder(y)
              << " with a different solubilizer; ";
        break;
      }
    }
    for (std::uint32_t x : cls.members) petalSets.insert(set.membersOf(x).words());
  }
  report.petals = static_cast<long long>(petalSets.size());
  report.bottleneck = report.confinementHolds && report.involutions < report.petals + 1;

  notes << report.petals << " dihedral petals of size " << (q + 1) << " vs "
        << report.involutions << " involutions";
  if (report.bottleneck)
    notes << "; too few involutions to enter and leave every petal";
  report.detail = notes.str();
  return report;
}

FullGraphFacts fullGraphFacts(long long deltaLower, long long deltaUpper) {
  FullGraphFacts facts;
  facts.chromaticLowerBound = deltaLower + 1;
  facts.chromaticUpperBound = deltaUpper + 1;
  facts.eulerian = false;
  facts.hamiltonianIfDeltaIs = true;
  return facts;
}

}  // namespace solcheck
