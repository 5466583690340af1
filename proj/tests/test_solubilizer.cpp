// Solubilizer tests. Sizes are frozen from independent counting: unions of
// the maximal soluble overgroups established in the subgroup tests, with
// inclusion-exclusion over their pairwise meets.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <vector>

#include "common.hpp"
#include "solcheck/solubilizer.hpp"

using namespace solcheck;
using solcheck::testing::testGroup;

namespace {

std::shared_ptr<const Group> sharedGroup(const std::string& s) {
  static std::map<std::string, std::shared_ptr<const Group>> cache;
  auto it = cache.find(s);
  if (it == cache.end()) it = cache.emplace(s, Group::build(s)).first;
  return it->second;
}

int classOfOrder(const Group& g, int order) {
  for (std::size_t i = 0; i < g.classes().size(); ++i)
    if (g.classes()[i].elementOrder == order) return static_cast<int>(i);
  throw std::logic_error("no class of that order");
}

std::map<int, std::vector<long long>> sizesByOrder(SolubilizerSet& set) {
  std::map<int, std::vector<long long>> out;
  for (const auto& r : set.all()) out[r.elementOrder].push_back(r.size);
  for (auto& [k, v] : out) std::sort(v.begin(), v.end());
  return out;
}

}  // namespace

TEST_CASE("size classification puts counts into the conjectured buckets") {
  using enum SizeClass;
  CHECK(classifySize(2) == P);
  CHECK(classifySize(3) == P);
  CHECK(classifySize(31) == P);
  CHECK(classifySize(4) == PSquared);
  CHECK(classifySize(9) == PSquared);
  CHECK(classifySize(49) == PSquared);
  CHECK(classifySize(27) == OddPrimePower);
  CHECK(classifySize(125) == OddPrimePower);
  CHECK(classifySize(243) == OddPrimePower);
  CHECK(classifySize(8) == PowerOfTwo);
  CHECK(classifySize(32) == PowerOfTwo);
  CHECK(classifySize(1024) == PowerOfTwo);
  CHECK(classifySize(1) == None);
  CHECK(classifySize(6) == None);
  CHECK(classifySize(36) == None);
  CHECK(classifySize(168) == None);
  CHECK(sizeClassName(P) != sizeClassName(PSquared));
  CHECK(sizeClassName(OddPrimePower) != sizeClassName(PowerOfTwo));
  CHECK(!sizeClassName(None).empty());
}

TEST_CASE("order-60 group: frozen solubilizer table") {
  SolubilizerSet set(sharedGroup("psl2:4"), SolMode::Shortcut);
  auto sizes = sizesByOrder(set);
  CHECK(sizes[1] == std::vector<long long>{60});
  CHECK(sizes[2] == std::vector<long long>{36});
  CHECK(sizes[3] == std::vector<long long>{24});
  CHECK(sizes[5] == std::vector<long long>{10, 10});

  const auto& invol = set.record(classOfOrder(set.group(), 2));
  CHECK(invol.probability == Rational(3, 5));
  CHECK_FALSE(invol.isSubgroup);
  CHECK(invol.size == static_cast<long long>(invol.members.count()));

  const auto& five = set.record(classOfOrder(set.group(), 5));
  CHECK(five.isSubgroup);   // a full dihedral of order 10
  CHECK(five.isSoluble);
  CHECK(five.probability == Rational(1, 6));

  const auto& idr = set.record(0);
  CHECK(idr.elementOrder == 1);
  CHECK(idr.size == 60);
  CHECK(idr.isSubgroup);
  CHECK_FALSE(idr.isSoluble);  // the whole group
  CHECK(idr.probability == Rational(1, 1));
}

TEST_CASE("order-168 group: frozen solubilizer table") {
  SolubilizerSet set(sharedGroup("psl2:7"), SolMode::Shortcut);
  auto sizes = sizesByOrder(set);
  CHECK(sizes[2] == std::vector<long long>{88});
  CHECK(sizes[3] == std::vector<long long>{78});
  CHECK(sizes[4] == std::vector<long long>{40});
  CHECK(sizes[7] == std::vector<long long>{21, 21});

  const auto& invol = set.record(classOfOrder(set.group(), 2));
  CHECK(invol.probability == Rational(11, 21));
  CHECK_FALSE(invol.isSubgroup);
  const auto& seven = set.record(classOfOrder(set.group(), 7));
  CHECK(seven.isSubgroup);  // the Frobenius group of order 21
  CHECK(seven.isSoluble);
}

TEST_CASE("order-504 group: frozen solubilizer table") {
  SolubilizerSet set(sharedGroup("psl2:8"), SolMode::Shortcut);
  auto sizes = sizesByOrder(set);
  CHECK(sizes[2] == std::vector<long long>{168});
  CHECK(sizes[3] == std::vector<long long>{18});
  CHECK(sizes[7] == std::vector<long long>{112, 112, 112});
  CHECK(sizes[9] == std::vector<long long>{18, 18, 18});

  // 168 divides 504, yet the union is not closed under multiplication
  const auto& invol = set.record(classOfOrder(set.group(), 2));
  CHECK_FALSE(invol.isSubgroup);
  const auto& nine = set.record(classOfOrder(set.group(), 9));
  CHECK(nine.isSubgroup);  // dihedral of order 18
  CHECK(nine.isSoluble);
}

TEST_CASE("torus classes whose solubilizer is one dihedral subgroup") {
  {
    SolubilizerSet set(sharedGroup("psl2:27"), SolMode::Shortcut);
    const auto& r = set.record(classOfOrder(set.group(), 14));
    CHECK(r.size == 28);
    CHECK(r.isSubgroup);
    CHECK(r.isSoluble);
    CHECK(r.size % r.elementOrder == 0);
  }
  {
    SolubilizerSet set(sharedGroup("sz:8"), SolMode::Shortcut);
    const auto& five = set.record(classOfOrder(set.group(), 5));
    CHECK(five.size == 20);
    CHECK(five.isSubgroup);
    CHECK(five.isSoluble);
    const auto& thirteen = set.record(classOfOrder(set.group(), 13));
    CHECK(thirteen.size == 52);
    CHECK(thirteen.isSubgroup);
    CHECK(thirteen.isSoluble);
    CHECK(set.computed(classOfOrder(set.group(), 5)));
    CHECK_FALSE(set.computed(classOfOrder(set.group(), 2)));  // lazy
  }
  {
    SolubilizerSet set(sharedGroup("psl3:3"), SolMode::Shortcut);
    const auto& r = set.record(classOfOrder(set.group(), 13));
    CHECK(r.size == 39);
    CHECK(r.isSubgroup);
    CHECK(r.isSoluble);
  }
}

TEST_CASE("records are conjugation-equivariant") {
  SolubilizerSet set(sharedGroup("psl2:4"), SolMode::Shortcut);
  const Group& g = set.group();
  // direct recomputation for every involution must match the conjugated record
  for (std::uint32_t y = 0; y < g.order(); ++y) {
    if (g.elementOrder(y) != 2) continue;
    PairSolubility engine(g, y, SolMode::Shortcut);
    IndexSet direct(g.order());
    for (std::uint32_t z = 0; z < g.order(); ++z)
      if (engine.soluble(z)) direct.set(z);
    CHECK(set.membersOf(y) == direct);
  }
  AxiomReport spot = spotCheckConjugation(set, 2, 0xfeedu);
  CHECK(spot.ok);
  CHECK(spot.violations.empty());
}

TEST_CASE("axioms hold on the small minimal simple groups") {
  for (const char* s : {"psl2:4", "psl2:7", "psl2:8"}) {
    SolubilizerSet set(sharedGroup(s), SolMode::Shortcut);
    AxiomReport rep = verifySolubilizerAxioms(set);
    INFO(s);
    for (const auto& v : rep.violations) INFO(v);
    CHECK(rep.ok);
    AxiomReport spot = spotCheckConjugation(set, 2, 42);
    CHECK(spot.ok);
  }
}

TEST_CASE("axioms hold in general mode, including a soluble whole group") {
  {
    SolubilizerSet set(sharedGroup("psl2:4"), SolMode::General);
    AxiomReport rep = verifySolubilizerAxioms(set);
    CHECK(rep.ok);
  }
  {
    SolubilizerSet set(sharedGroup("sz:2"), SolMode::General);
    for (const auto& r : set.all()) {
      CHECK(r.size == set.group().order());  // everything is soluble here
      CHECK(r.isSubgroup);
      CHECK(r.isSoluble);
    }
    AxiomReport rep = verifySolubilizerAxioms(set);
    CHECK(rep.ok);
  }
}

TEST_CASE("the two modes produce identical records") {
  SolubilizerSet fast(sharedGroup("psl2:4"), SolMode::Shortcut);
  SolubilizerSet gen(sharedGroup("psl2:4"), SolMode::General);
  for (std::size_t i = 0; i < fast.group().classes().size(); ++i) {
    const auto& a = fast.record(static_cast<int>(i));
    const auto& b = gen.record(static_cast<int>(i));
    CHECK(a.members == b.members);
    CHECK(a.isSubgroup == b.isSubgroup);
    CHECK(a.isSoluble == b.isSoluble);
  }
}

TEST_CASE("record scans are thread-count independent") {
  SolubilizerSet one(sharedGroup("psl2:7"), SolMode::Shortcut, 1);
  SolubilizerSet three(sharedGroup("psl2:7"), SolMode::Shortcut, 3);
  for (std::size_t i = 0; i < one.group().classes().size(); ++i) {
    const auto& a = one.record(static_cast<int>(i));
    const auto& b = three.record(static_cast<int>(i));
    CHECK(a.members == b.members);
    CHECK(a.size == b.size);
  }
}

TEST_CASE("conjecture scan is clean on the small groups") {
  {
    SolubilizerSet set(sharedGroup("psl2:4"), SolMode::Shortcut);
    ConjectureReport rep = scanConjectures(set);
    for (const auto& v : rep.violations) INFO(v);
    CHECK(rep.ok);
    CHECK(rep.violations.empty());
    // the probability bound is attained here; that shows up as a note
    bool mentioned = false;
    for (const auto& n : rep.notes) mentioned |= n.find("3/5") != std::string::npos;
    CHECK(mentioned);
  }
  for (const char* s : {"psl2:7", "psl2:8"}) {
    SolubilizerSet set(sharedGroup(s), SolMode::Shortcut);
    ConjectureReport rep = scanConjectures(set);
    INFO(s);
    for (const auto& v : rep.violations) INFO(v);
    CHECK(rep.ok);
    CHECK(rep.violations.empty());
  }
}
