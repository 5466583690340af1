#include "solcheck/subgroup.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "solcheck/rng.hpp"

namespace solcheck {

namespace {

constexpr std::size_t kAllPairsLimit = 2048;

std::uint64_t hashMembers(const std::vector<std::uint32_t>& sorted) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (std::uint32_t m : sorted) {
    h ^= m;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint32_t commutator(const Group& g, std::uint32_t a, std::uint32_t b) {
  return g.mul(g.mul(g.inverseOf(a), g.inverseOf(b)), g.mul(a, b));
}

// Derived subgroup of the subgroup H given by `members` (order > kAllPairsLimit
// path): the normal closure in H of the pairwise generator commutators, which
// equals [H,H] because H modulo that closure is generated by commuting images.
std::vector<std::uint32_t> derivedViaGenerators(const Group& g,
                                                const std::vector<std::uint32_t>& members) {
  const long long n = static_cast<long long>(members.size());
  std::vector<std::uint32_t> gens = smallGeneratingSet(g, members);
  std::vector<std::uint32_t> seed;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      seed.push_back(commutator(g, gens[i], gens[j]));
  ClosureResult d = closure(g, seed, n);
  for (;;) {
    std::vector<std::uint32_t> escaped;
    for (std::uint32_t m : d.elements)
      for (std::uint32_t t : gens) {
        std::uint32_t c = g.conjugate(t, m);
        if (!d.members.test(c)) escaped.push_back(c);
      }
    if (escaped.empty()) break;
    std::vector<std::uint32_t> next = d.elements;
    next.insert(next.end(), escaped.begin(), escaped.end());
    d = closure(g, next, n);
  }
  // defensive sweep: sampled commutators of full members must already be inside
  XorShift64 rng(0x5eedu ^ static_cast<std::uint64_t>(n));
  for (int i = 0; i < 128; ++i) {
    std::uint32_t a = members[rng.next() % members.size()];
    std::uint32_t b = members[rng.next() % members.size()];
    std::uint32_t c = commutator(g, a, b);
    if (!d.members.test(c)) {
      std::vector<std::uint32_t> next = d.elements;
      next.push_back(c);
      d = closure(g, next, n);
    }
  }
  return d.members.toVector();
}

std::vector<std::uint32_t> derivedSubgroup(const Group& g,
                                           const std::vector<std::uint32_t>& members) {
  if (members.size() > kAllPairsLimit) return derivedViaGenerators(g, members);
  IndexSet seen(g.order());
  std::vector<std::uint32_t> comms;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      std::uint32_t c = commutator(g, members[i], members[j]);
      if (!seen.test(c)) {
        seen.set(c);
        comms.push_back(c);
      }
    }
  ClosureResult d = closure(g, comms, static_cast<long long>(members.size()));
  return d.members.toVector();
}

}  // namespace

ClosureResult closure(const Group& g, const std::vector<std::uint32_t>& generators,
                      long long abortThreshold) {
  ClosureResult out;
  out.members = IndexSet(g.order());
  out.elements.reserve(64);
  out.members.set(g.identity());
  out.elements.push_back(g.identity());
  long long count = 1;
  for (std::size_t qi = 0; qi < out.elements.size(); ++qi) {
    std::uint32_t m = out.elements[qi];
    for (std::uint32_t t : generators) {
      std::uint32_t c = g.mul(m, t);
      if (!out.members.test(c)) {
        out.members.set(c);
        if (++count > abortThreshold) {
          out.completed = false;
          return out;
        }
        out.elements.push_back(c);
      }
    }
  }
  return out;
}

std::vector<std::uint32_t> smallGeneratingSet(const Group& g,
                                              const std::vector<std::uint32_t>& members) {
  std::vector<std::uint32_t> gens;
  IndexSet have(g.order());
  have.set(g.identity());
  for (std::uint32_t m : members) {
    if (have.test(m)) continue;
    gens.push_back(m);
    have = closure(g, gens, static_cast<long long>(members.size())).members;
  }
  return gens;
}

DerivedResult derivedSeries(const Group& g, const std::vector<std::uint32_t>& members) {
  std::vector<std::uint32_t> cur = members;
  int length = 0;
  for (;;) {
    if (cur.size() <= 1) return {true, length};
    std::vector<std::uint32_t> next = derivedSubgroup(g, cur);
    if (next.size() == cur.size()) return {false, -1};
    cur = std::move(next);
    ++length;
  }
}

bool Fingerprint::operator==(const Fingerprint& o) const {
  return order == o.order && orderHistogram == o.orderHistogram && abelian == o.abelian &&
         derivedLength == o.derivedLength;
}

bool Fingerprint::operator<(const Fingerprint& o) const {
  if (order != o.order) return order < o.order;
  if (orderHistogram != o.orderHistogram) return orderHistogram < o.orderHistogram;
  if (abelian != o.abelian) return abelian < o.abelian;
  return derivedLength < o.derivedLength;
}

std::string Fingerprint::str() const {
  std::ostringstream os;
  os << "order=" << order << ";orders={";
  for (std::size_t i = 0; i < orderHistogram.size(); ++i) {
    if (i) os << ",";
    os << orderHistogram[i].first << ":" << orderHistogram[i].second;
  }
  os << "};abelian=" << (abelian ? 1 : 0) << ";derivedLength=" << derivedLength;
  return os.str();
}

Fingerprint fingerprintOf(const Group& g, const std::vector<std::uint32_t>& members) {
  Fingerprint f;
  f.order = static_cast<long long>(members.size());
  std::map<int, long long> hist;
  for (std::uint32_t m : members) ++hist[g.elementOrder(m)];
  f.orderHistogram.assign(hist.begin(), hist.end());
  f.abelian = true;
  for (std::size_t i = 0; i < members.size() && f.abelian; ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (g.mul(members[i], members[j]) != g.mul(members[j], members[i])) {
        f.abelian = false;
        break;
      }
  f.derivedLength = derivedSeries(g, members).derivedLength;
  return f;
}

long long properSubgroupBound(const GroupSpec& spec) {
  if (!spec.minimalSimple())
    throw std::invalid_argument("no proper-subgroup bound: " + spec.text() +
                                " has insoluble proper subgroups or is not simple");
  const long long q = spec.fieldOrder;
  switch (spec.family) {
    case Family::Psl2:
      if (q % 2 == 0) return q * (q - 1);
      if (q % 3 == 0) return q * (q - 1) / 2;
      return std::max(q * (q - 1) / 2, 24ll);
    case Family::Psl3:
      return 432;  // point/line stabilizers in the order-5616 group
    case Family::Sz:
      return q * q * (q - 1);
    default:
      throw std::invalid_argument("no proper-subgroup bound for " + spec.text());
  }
}

bool groupIsInsoluble(const Group& g) {
  static std::mutex mx;
  static std::map<std::string, bool> cache;
  const std::string key = g.spec().text();
  {
    std::lock_guard<std::mutex> lock(mx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::vector<std::uint32_t> all(g.order());
  std::iota(all.begin(), all.end(), 0u);
  bool insoluble = !derivedSeries(g, all).soluble;
  std::lock_guard<std::mutex> lock(mx);
  cache.emplace(key, insoluble);
  return insoluble;
}

PairSolubility::PairSolubility(const Group& g, std::uint32_t x, SolMode mode)
    : g_(g), x_(x), mode_(mode) {
  bound_ = mode == SolMode::Shortcut ? properSubgroupBound(g.spec()) : g.order() / 2;
  mulByX_.resize(g.order());
  for (std::uint32_t m = 0; m < g.order(); ++m) mulByX_[m] = g.mul(m, x);
}

bool PairSolubility::closurePair(std::uint32_t y, long long bound, ClosureResult& out) const {
  out.members = IndexSet(g_.order());
  out.elements.clear();
  out.completed = true;
  out.members.set(g_.identity());
  out.elements.push_back(g_.identity());
  long long count = 1;
  for (std::size_t qi = 0; qi < out.elements.size(); ++qi) {
    std::uint32_t m = out.elements[qi];
    std::uint32_t byX = mulByX_[m];
    std::uint32_t byY = g_.mul(m, y);
    for (std::uint32_t c : {byX, byY}) {
      if (!out.members.test(c)) {
        out.members.set(c);
        if (++count > bound) {
          out.completed = false;
          return false;
        }
        out.elements.push_back(c);
      }
    }
  }
  return true;
}

bool PairSolubility::subgroupSoluble(ClosureResult& h) {
  std::vector<std::uint32_t> sorted = h.members.toVector();
  std::uint64_t key = hashMembers(sorted);
  auto& bucket = verdicts_[key];
  for (const auto& [mem, verdict] : bucket)
    if (mem == sorted) return verdict;
  bool verdict = derivedSeries(g_, sorted).soluble;
  bucket.emplace_back(std::move(sorted), verdict);
  return verdict;
}

bool PairSolubility::soluble(std::uint32_t y) {
  if (y == x_ || y == g_.identity()) return true;
  for (const IndexSet& s : solubleOvergroups_)
    if (s.test(y)) return true;
  ClosureResult h;
  bool completed = closurePair(y, bound_, h);
  bool verdict;
  if (mode_ == SolMode::Shortcut) {
    // every proper subgroup is soluble here, and an aborted closure outgrew
    // every proper subgroup, i.e. generated the whole (insoluble) group
    verdict = completed;
  } else if (!completed) {
    verdict = !groupIsInsoluble(g_);
  } else {
    verdict = subgroupSoluble(h);
  }
  if (verdict && completed) {
    bool subsumed = false;
    for (const IndexSet& s : solubleOvergroups_)
      if (s.containsAll(h.members)) {
        subsumed = true;
        break;
      }
    if (!subsumed) {
      std::erase_if(solubleOvergroups_,
                    [&](const IndexSet& s) { return h.members.containsAll(s); });
      solubleOvergroups_.push_back(std::move(h.members));
    }
  }
  return verdict;
}

bool isPairSoluble(const Group& g, std::uint32_t x, std::uint32_t y, SolMode mode) {
  PairSolubility engine(g, x, mode);
  return engine.soluble(y);
}

namespace {

// solubility of an explicitly closed subgroup during the ascent
bool closedSubgroupSoluble(
    const Group& g, SolMode mode, const ClosureResult& h,
    std::map<std::vector<std::uint32_t>, bool>& cache) {
  if (!h.completed) return false;  // outgrew every proper (or soluble) subgroup
  if (mode == SolMode::Shortcut) return true;
  std::vector<std::uint32_t> sorted = h.members.toVector();
  auto it = cache.find(sorted);
  if (it != cache.end()) return it->second;
  bool verdict = derivedSeries(g, sorted).soluble;
  cache.emplace(std::move(sorted), verdict);
  return verdict;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> maximalSolubleOvergroups(
    const Group& g, std::uint32_t x, SolMode mode, const IndexSet& solMembers) {
  if (mode == SolMode::General && !groupIsInsoluble(g)) {
    // a soluble group is its own unique maximal soluble overgroup
    std::vector<std::uint32_t> all(g.order());
    std::iota(all.begin(), all.end(), 0u);
    return {all};
  }
  const long long bound =
      mode == SolMode::Shortcut ? properSubgroupBound(g.spec()) : g.order() / 2;
  const std::vector<std::uint32_t> solList = solMembers.toVector();
  std::map<std::vector<std::uint32_t>, bool> verdictCache;

  // Every soluble subgroup containing x lies inside Sol_G(x), so walking from
  // <x> through all distinct single-element soluble extensions visits the
  // whole lattice of soluble overgroups of x; the childless nodes are exactly
  // the maximal ones. Visiting each subgroup once keeps the walk finite, but
  // a node stays non-maximal even when all its extensions were seen before.
  struct Node {
    std::vector<std::uint32_t> members;  // sorted
    std::vector<std::uint32_t> gens;
  };
  std::set<std::vector<std::uint32_t>> visited;
  std::vector<Node> pending;
  auto push = [&](const ClosureResult& h, std::vector<std::uint32_t>&& gens) {
    std::vector<std::uint32_t> members = h.members.toVector();
    if (!visited.insert(members).second) return;
    pending.push_back({std::move(members), std::move(gens)});
  };
  push(closure(g, {x}, bound), {x});

  std::vector<std::vector<std::uint32_t>> found;
  while (!pending.empty()) {
    Node node = std::move(pending.back());
    pending.pop_back();
    IndexSet members(g.order());
    for (std::uint32_t m : node.members) members.set(m);
    bool extendable = false;
    for (std::uint32_t z : solList) {
      if (members.test(z)) continue;
      std::vector<std::uint32_t> candGens = node.gens;
      candGens.push_back(z);
      ClosureResult cand = closure(g, candGens, bound);
      if (!closedSubgroupSoluble(g, mode, cand, verdictCache)) continue;
      extendable = true;
      push(cand, std::move(candGens));
    }
    if (!extendable) found.push_back(std::move(node.members));
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return found;
}

std::map<Fingerprint, int> intersectionTally(
    const Group& g, const std::vector<std::vector<std::uint32_t>>& overgroups) {
  std::map<Fingerprint, int> tally;
  for (std::size_t i = 0; i < overgroups.size(); ++i)
    for (std::size_t j = i + 1; j < overgroups.size(); ++j) {
      std::vector<std::uint32_t> meet;
      std::set_intersection(overgroups[i].begin(), overgroups[i].end(),
                            overgroups[j].begin(), overgroups[j].end(),
                            std::back_inserter(meet));
      ++tally[fingerprintOf(g, meet)];
    }
  return tally;
}

}  // namespace solcheck
