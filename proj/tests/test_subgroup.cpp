// Subgroup/solubility tests. The reference oracle below recomputes pair
// solubility from scratch (plain BFS closure, full all-pairs derived series,
// no caching, no bounds) and the expected overgroup multisets are frozen from
// independent structure computations.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "common.hpp"
#include "solcheck/subgroup.hpp"

using namespace solcheck;
using solcheck::testing::testGroup;

namespace {

std::vector<std::uint32_t> refClosure(const Group& g, std::vector<std::uint32_t> gens) {
  std::set<std::uint32_t> members{g.identity()};
  std::vector<std::uint32_t> queue{g.identity()};
  for (std::size_t qi = 0; qi < queue.size(); ++qi)
    for (std::uint32_t t : gens) {
      std::uint32_t m = g.mul(queue[qi], t);
      if (members.insert(m).second) queue.push_back(m);
    }
  return {members.begin(), members.end()};
}

// full derived-series solubility, all commutator pairs, no shortcuts
bool refSoluble(const Group& g, std::vector<std::uint32_t> members) {
  while (members.size() > 1) {
    std::set<std::uint32_t> comms;
    for (std::uint32_t a : members)
      for (std::uint32_t b : members)
        comms.insert(g.mul(g.mul(g.inverseOf(a), g.inverseOf(b)), g.mul(a, b)));
    std::vector<std::uint32_t> derived =
        refClosure(g, std::vector<std::uint32_t>(comms.begin(), comms.end()));
    if (derived.size() == members.size()) return false;
    members = std::move(derived);
  }
  return true;
}

std::uint32_t repOfOrder(const Group& g, int order, long long classSize = 0) {
  for (const auto& c : g.classes())
    if (c.elementOrder == order &&
        (classSize == 0 || static_cast<long long>(c.members.size()) == classSize))
      return c.representative;
  throw std::logic_error("no class of that order");
}

// first 2-generated subgroup of the requested order
std::vector<std::uint32_t> findSubgroupOfOrder(const Group& g, std::size_t n) {
  for (std::uint32_t a = 1; a < g.order(); ++a)
    for (std::uint32_t b = a + 1; b < g.order(); ++b) {
      auto c = closure(g, {a, b}, static_cast<long long>(n));
      if (c.completed && c.elements.size() == n) {
        auto v = c.members.toVector();
        return {v.begin(), v.end()};
      }
    }
  throw std::logic_error("no subgroup of that order");
}

IndexSet solSetOf(const Group& g, std::uint32_t x, SolMode mode) {
  PairSolubility engine(g, x, mode);
  IndexSet out(g.order());
  for (std::uint32_t y = 0; y < g.order(); ++y)
    if (engine.soluble(y)) out.set(y);
  return out;
}

std::vector<long long> overgroupOrders(const std::vector<std::vector<std::uint32_t>>& o) {
  std::vector<long long> v;
  for (const auto& s : o) v.push_back(static_cast<long long>(s.size()));
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("closure reproduces cyclic subgroups and the whole group") {
  const Group& g = *testGroup("psl2:7");
  for (const auto& c : g.classes()) {
    auto cyc = g.cyclicSubgroup(c.representative);
    auto cl = closure(g, {c.representative}, g.order());
    CHECK(cl.completed);
    CHECK(cl.members.toVector() == cyc);
    CHECK(cl.elements.size() == cyc.size());
  }
  auto whole = closure(g, g.generators(), g.order());
  CHECK(whole.completed);
  CHECK(static_cast<long long>(whole.elements.size()) == g.order());
  // abort threshold trips when the subgroup is larger
  auto aborted = closure(g, g.generators(), g.order() / 2);
  CHECK_FALSE(aborted.completed);
  // empty generating set closes to the identity
  auto trivial = closure(g, {}, g.order());
  CHECK(trivial.completed);
  CHECK(trivial.elements.size() == 1);
}

TEST_CASE("closure agrees with the reference on random pairs") {
  for (const char* s : {"psl2:4", "psl2:8"}) {
    const Group& g = *testGroup(s);
    std::uint64_t h = 0x12345;
    for (int i = 0; i < 40; ++i) {
      h = h * 6364136223846793005ull + 1442695040888963407ull;
      std::uint32_t a = static_cast<std::uint32_t>((h >> 16) % g.order());
      h = h * 6364136223846793005ull + 1442695040888963407ull;
      std::uint32_t b = static_cast<std::uint32_t>((h >> 16) % g.order());
      auto mine = closure(g, {a, b}, g.order());
      auto ref = refClosure(g, {a, b});
      CHECK(mine.completed);
      CHECK(mine.members.toVector() == ref);
    }
  }
}

TEST_CASE("small generating sets regenerate their subgroups") {
  const Group& g8 = *testGroup("psl2:8");
  auto d18 = g8.cyclicNormalizer(repOfOrder(g8, 9));
  CHECK(d18.size() == 18);
  auto gens = smallGeneratingSet(g8, d18);
  CHECK(gens.size() <= 3);
  auto back = closure(g8, gens, g8.order());
  CHECK(back.completed);
  CHECK(back.members.toVector() == d18);

  std::vector<std::uint32_t> all(g8.order());
  for (std::uint32_t i = 0; i < g8.order(); ++i) all[i] = i;
  auto wholeGens = smallGeneratingSet(g8, all);
  CHECK(wholeGens.size() <= 4);
  CHECK(closure(g8, wholeGens, g8.order()).elements.size() == all.size());
}

TEST_CASE("derived series classifies frozen subgroup examples") {
  const Group& g4 = *testGroup("psl2:4");
  const Group& g7 = *testGroup("psl2:7");
  const Group& g8 = *testGroup("psl2:8");

  // trivial subgroup: length 0
  auto dr = derivedSeries(g4, {g4.identity()});
  CHECK(dr.soluble);
  CHECK(dr.derivedLength == 0);
  // nontrivial cyclic: length 1
  dr = derivedSeries(g4, g4.cyclicSubgroup(repOfOrder(g4, 5)));
  CHECK(dr.soluble);
  CHECK(dr.derivedLength == 1);
  // symmetric group on 3 letters (normalizer of an order-3 cyclic): length 2
  dr = derivedSeries(g7, g7.cyclicNormalizer(repOfOrder(g7, 3)));
  CHECK(dr.soluble);
  CHECK(dr.derivedLength == 2);
  // dihedral of order 18: length 2
  dr = derivedSeries(g8, g8.cyclicNormalizer(repOfOrder(g8, 9)));
  CHECK(dr.soluble);
  CHECK(dr.derivedLength == 2);
  // alternating group on 4 letters inside the order-60 group: length 2
  dr = derivedSeries(g4, findSubgroupOfOrder(g4, 12));
  CHECK(dr.soluble);
  CHECK(dr.derivedLength == 2);
  // symmetric group on 4 letters inside the order-168 group: length 3
  dr = derivedSeries(g7, findSubgroupOfOrder(g7, 24));
  CHECK(dr.soluble);
  CHECK(dr.derivedLength == 3);
}

TEST_CASE("whole-group solubility matches the family structure") {
  for (const char* s : {"psl2:4", "psl2:7", "psl2:13", "psl2:16", "psl3:3", "psl4:2", "sz:8"}) {
    const Group& g = *testGroup(s);
    std::vector<std::uint32_t> all(g.order());
    for (std::uint32_t i = 0; i < g.order(); ++i) all[i] = i;
    auto dr = derivedSeries(g, all);
    CHECK_FALSE(dr.soluble);
    CHECK(dr.derivedLength == -1);
    CHECK(groupIsInsoluble(g));
  }
  // tiny soluble cousins built from the same matrix machinery
  for (const char* s : {"psl2:2", "psl2:3", "sz:2"}) {
    const Group& g = *testGroup(s);
    std::vector<std::uint32_t> all(g.order());
    for (std::uint32_t i = 0; i < g.order(); ++i) all[i] = i;
    auto dr = derivedSeries(g, all);
    CHECK(dr.soluble);
    CHECK(dr.derivedLength == 2);
    CHECK_FALSE(groupIsInsoluble(g));
  }
}

TEST_CASE("derived series agrees with the reference oracle on random subgroups") {
  for (const char* s : {"psl2:7", "psl2:8", "psl2:13"}) {
    const Group& g = *testGroup(s);
    std::uint64_t h = 0xabcdef;
    for (int i = 0; i < 25; ++i) {
      h = h * 6364136223846793005ull + 1442695040888963407ull;
      std::uint32_t a = static_cast<std::uint32_t>((h >> 16) % g.order());
      h = h * 6364136223846793005ull + 1442695040888963407ull;
      std::uint32_t b = static_cast<std::uint32_t>((h >> 16) % g.order());
      auto sub = closure(g, {a, b}, g.order());
      auto members = sub.members.toVector();
      std::vector<std::uint32_t> mv(members.begin(), members.end());
      CHECK(derivedSeries(g, mv).soluble == refSoluble(g, mv));
    }
  }
}

TEST_CASE("fingerprints carry order, histogram, abelianness, derived length") {
  const Group& g13 = *testGroup("psl2:13");
  auto c6 = g13.cyclicSubgroup(repOfOrder(g13, 6));
  Fingerprint f = fingerprintOf(g13, c6);
  CHECK(f.order == 6);
  CHECK(f.abelian);
  CHECK(f.derivedLength == 1);
  CHECK(f.orderHistogram ==
        std::vector<std::pair<int, long long>>{{1, 1}, {2, 1}, {3, 2}, {6, 2}});

  const Group& g7 = *testGroup("psl2:7");
  Fingerprint s3 = fingerprintOf(g7, g7.cyclicNormalizer(repOfOrder(g7, 3)));
  CHECK(s3.order == 6);
  CHECK_FALSE(s3.abelian);
  CHECK(s3.derivedLength == 2);
  CHECK(s3.orderHistogram ==
        std::vector<std::pair<int, long long>>{{1, 1}, {2, 3}, {3, 2}});
  CHECK(f != s3);
  CHECK((f < s3 || s3 < f));
  CHECK(!f.str().empty());

  Fingerprint d4 = fingerprintOf(g7, findSubgroupOfOrder(g7, 8));
  CHECK(d4.order == 8);
  CHECK_FALSE(d4.abelian);
  CHECK(d4.derivedLength == 2);
  CHECK(d4.orderHistogram ==
        std::vector<std::pair<int, long long>>{{1, 1}, {2, 5}, {4, 2}});
}

TEST_CASE("largest-proper-subgroup bounds match frozen values") {
  auto bound = [](const char* s) { return properSubgroupBound(GroupSpec::parse(s)); };
  CHECK(bound("psl2:4") == 12);
  CHECK(bound("psl2:8") == 56);
  CHECK(bound("psl2:32") == 992);
  CHECK(bound("psl2:27") == 351);
  CHECK(bound("psl2:7") == 24);    // the octahedral subgroup beats the Borel here
  CHECK(bound("psl2:13") == 78);
  CHECK(bound("psl2:17") == 136);
  CHECK(bound("psl2:23") == 253);
  CHECK(bound("psl2:37") == 666);
  CHECK(bound("psl3:3") == 432);
  CHECK(bound("sz:8") == 448);
  for (const char* s : {"psl2:11", "psl2:16", "psl2:9", "psl2:19", "psl2:31", "psl4:2"})
    CHECK_THROWS_AS(properSubgroupBound(GroupSpec::parse(s)), std::invalid_argument);
}

TEST_CASE("pair solubility agrees with the reference in both modes") {
  {
    const Group& g = *testGroup("psl2:4");
    for (const auto& c : g.classes()) {
      PairSolubility fast(g, c.representative, SolMode::Shortcut);
      PairSolubility gen(g, c.representative, SolMode::General);
      for (std::uint32_t y = 0; y < g.order(); ++y) {
        auto sub = closure(g, {c.representative, y}, g.order());
        bool expect = refSoluble(g, sub.members.toVector());
        CHECK(fast.soluble(y) == expect);
        CHECK(gen.soluble(y) == expect);
      }
    }
  }
  {
    const Group& g = *testGroup("psl2:7");
    for (const auto& c : g.classes()) {
      PairSolubility fast(g, c.representative, SolMode::Shortcut);
      PairSolubility gen(g, c.representative, SolMode::General);
      for (std::uint32_t y = 0; y < g.order(); ++y) {
        auto sub = closure(g, {c.representative, y}, g.order());
        bool expect = refSoluble(g, sub.members.toVector());
        CHECK(fast.soluble(y) == expect);
        CHECK(gen.soluble(y) == expect);
      }
    }
  }
  {
    // general mode on groups where the whole group is soluble: everything pairs
    const Group& g = *testGroup("sz:2");
    for (std::uint32_t x = 0; x < g.order(); ++x) {
      PairSolubility gen(g, x, SolMode::General);
      for (std::uint32_t y = 0; y < g.order(); ++y) CHECK(gen.soluble(y));
    }
  }
}

TEST_CASE("the two modes agree classwise on a mid-sized group") {
  const Group& g = *testGroup("psl2:8");
  for (const auto& c : g.classes()) {
    IndexSet a = solSetOf(g, c.representative, SolMode::Shortcut);
    IndexSet b = solSetOf(g, c.representative, SolMode::General);
    CHECK(a == b);
  }
}

TEST_CASE("maximal soluble overgroups: frozen multisets") {
  {
    const Group& g = *testGroup("psl2:4");
    auto check = [&](int order, std::vector<long long> want) {
      std::uint32_t x = repOfOrder(g, order);
      IndexSet sol = solSetOf(g, x, SolMode::Shortcut);
      auto over = maximalSolubleOvergroups(g, x, SolMode::Shortcut, sol);
      CHECK(overgroupOrders(over) == want);
    };
    check(2, {6, 6, 10, 10, 12});
    check(3, {6, 12, 12});
    check(5, {10});
  }
  {
    const Group& g = *testGroup("psl2:8");
    auto check = [&](int order, std::vector<long long> want) {
      std::uint32_t x = repOfOrder(g, order);
      IndexSet sol = solSetOf(g, x, SolMode::Shortcut);
      auto over = maximalSolubleOvergroups(g, x, SolMode::Shortcut, sol);
      CHECK(overgroupOrders(over) == want);
    };
    // the torus case needs the ascent past its 2-generated seeds: a single
    // dihedral of order 18 is the only maximal soluble overgroup
    check(3, {18});
    check(9, {18});
    check(2, {14, 14, 14, 14, 18, 18, 18, 18, 56});
    check(7, {14, 56, 56});
  }
  {
    const Group& g = *testGroup("sz:8");
    for (auto [ord, want] : {std::pair<int, long long>{5, 20}, {13, 52}}) {
      std::uint32_t x = repOfOrder(g, ord);
      IndexSet sol = solSetOf(g, x, SolMode::Shortcut);
      auto over = maximalSolubleOvergroups(g, x, SolMode::Shortcut, sol);
      CHECK(overgroupOrders(over) == std::vector<long long>{want});
      CHECK(sol.count() == static_cast<std::size_t>(want));
    }
  }
  {
    const Group& g = *testGroup("psl3:3");
    std::uint32_t x = repOfOrder(g, 13);
    IndexSet sol = solSetOf(g, x, SolMode::Shortcut);
    auto over = maximalSolubleOvergroups(g, x, SolMode::Shortcut, sol);
    CHECK(overgroupOrders(over) == std::vector<long long>{39});
    CHECK(sol.count() == 39);
  }
}

TEST_CASE("maximal soluble overgroups satisfy their invariants") {
  const Group& g = *testGroup("psl2:7");
  for (const auto& c : g.classes()) {
    if (c.elementOrder == 1) continue;
    std::uint32_t x = c.representative;
    IndexSet sol = solSetOf(g, x, SolMode::Shortcut);
    auto over = maximalSolubleOvergroups(g, x, SolMode::Shortcut, sol);
    CHECK(!over.empty());
    IndexSet unionSet(g.order());
    std::vector<IndexSet> sets;
    for (const auto& H : over) {
      CHECK(std::is_sorted(H.begin(), H.end()));
      CHECK(std::binary_search(H.begin(), H.end(), x));
      CHECK(refSoluble(g, H));
      IndexSet hs(g.order());
      for (std::uint32_t m : H) hs.set(m);
      unionSet |= hs;
      sets.push_back(std::move(hs));
    }
    CHECK(unionSet == sol);
    for (std::size_t i = 0; i < sets.size(); ++i)
      for (std::size_t j = 0; j < sets.size(); ++j)
        if (i != j) CHECK_FALSE(sets[i].containsAll(sets[j]));
    // results come sorted by order
    for (std::size_t i = 1; i < over.size(); ++i)
      CHECK(over[i - 1].size() <= over[i].size());
  }
}

TEST_CASE("intersection tallies count pairwise meets by shape") {
  {
    const Group& g = *testGroup("psl2:4");
    std::uint32_t x = repOfOrder(g, 3);
    IndexSet sol = solSetOf(g, x, SolMode::Shortcut);
    auto over = maximalSolubleOvergroups(g, x, SolMode::Shortcut, sol);
    auto tally = intersectionTally(g, over);
    // three pairwise intersections, every one cyclic of order 3
    CHECK(tally.size() == 1);
    const auto& [fp, count] = *tally.begin();
    CHECK(fp.order == 3);
    CHECK(fp.abelian);
    CHECK(count == 3);
  }
  {
    const Group& g = *testGroup("psl2:8");
    std::uint32_t x = repOfOrder(g, 2);
    IndexSet sol = solSetOf(g, x, SolMode::Shortcut);
    auto over = maximalSolubleOvergroups(g, x, SolMode::Shortcut, sol);
    auto tally = intersectionTally(g, over);
    CHECK(tally.size() == 1);
    const auto& [fp, count] = *tally.begin();
    CHECK(fp.order == 2);
    CHECK(count == 36);  // nine subgroups meeting pairwise in the same involution
  }
}
