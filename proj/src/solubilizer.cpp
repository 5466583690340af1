#include "solcheck/solubilizer.hpp"

#include <algorithm>
#include <thread>

#include "solcheck/rng.hpp"

namespace solcheck {

namespace {

bool isPrime(long long v) {
  if (v < 2) return false;
  for (long long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

}  // namespace

SizeClass classifySize(long long n) {
  if (n < 2) return SizeClass::None;
  if (isPrime(n)) return SizeClass::P;
  long long p = n;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  long long rest = n;
  int k = 0;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) return SizeClass::None;  // more than one prime divisor
  if (k == 2) return SizeClass::PSquared;
  return p == 2 ? SizeClass::PowerOfTwo : SizeClass::OddPrimePower;
}

std::string sizeClassName(SizeClass c) {
  switch (c) {
    case SizeClass::P: return "prime";
    case SizeClass::PSquared: return "prime squared";
    case SizeClass::OddPrimePower: return "odd prime power";
    case SizeClass::PowerOfTwo: return "power of two";
    case SizeClass::None: return "unconstrained";
  }
  return "unconstrained";
}

SolubilizerSet::SolubilizerSet(std::shared_ptr<const Group> g, SolMode mode, int threads)
    : g_(std::move(g)), mode_(mode), threads_(std::max(1, threads)) {
  records_.resize(g_->classes().size());
  computed_.assign(g_->classes().size(), false);
}

void SolubilizerSet::compute(int classIndex) {
  const Group& g = *g_;
  const ConjugacyClass& cls = g.classes()[static_cast<std::size_t>(classIndex)];
  SolubilizerRecord rec;
  rec.classIndex = classIndex;
  rec.representative = cls.representative;
  rec.elementOrder = cls.elementOrder;
  rec.classSize = static_cast<long long>(cls.members.size());
  rec.normalizerOrder = cls.normalizerOrder;
  rec.members = IndexSet(g.order());

  const std::uint32_t n = static_cast<std::uint32_t>(g.order());
  auto scan = [&g, &cls, this](std::uint32_t lo, std::uint32_t hi, IndexSet& out) {
    PairSolubility engine(g, cls.representative, mode_);
    for (std::uint32_t y = lo; y < hi; ++y)
      if (engine.soluble(y)) out.set(y);
  };
  if (threads_ <= 1 || n < 4u * static_cast<std::uint32_t>(threads_)) {
    scan(0, n, rec.members);
  } else {
    std::vector<IndexSet> parts(static_cast<std::size_t>(threads_), IndexSet(g.order()));
    std::vector<std::thread> pool;
    const std::uint32_t chunk = (n + threads_ - 1) / threads_;
    for (int t = 0; t < threads_; ++t) {
      const std::uint32_t lo = static_cast<std::uint32_t>(t) * chunk;
      const std::uint32_t hi = std::min(n, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(scan, lo, hi, std::ref(parts[static_cast<std::size_t>(t)]));
    }
    for (auto& th : pool) th.join();
    for (const auto& part : parts) rec.members |= part;
  }

  rec.size = static_cast<long long>(rec.members.count());
  rec.probability = Rational(rec.size, g.order());
  std::vector<std::uint32_t> mv = rec.members.toVector();
  rec.isSubgroup = closure(g, mv, rec.size).completed;
  rec.isSoluble = rec.isSubgroup && derivedSeries(g, mv).soluble;
  records_[static_cast<std::size_t>(classIndex)] = std::move(rec);
  computed_[static_cast<std::size_t>(classIndex)] = true;
}

const SolubilizerRecord& SolubilizerSet::record(int classIndex) {
  if (!computed_[static_cast<std::size_t>(classIndex)]) compute(classIndex);
  return records_[static_cast<std::size_t>(classIndex)];
}

const std::vector<SolubilizerRecord>& SolubilizerSet::all() {
  for (std::size_t i = 0; i < records_.size(); ++i) record(static_cast<int>(i));
  return records_;
}

IndexSet SolubilizerSet::membersOf(std::uint32_t element) {
  const Group& g = *g_;
  const SolubilizerRecord& rec = record(g.classIndexOf(element));
  if (element == rec.representative) return rec.members;
  // element = w^{-1} rep w, so Sol(element) = w^{-1} Sol(rep) w
  const std::uint32_t w = g.conjugatorToRep(element);
  IndexSet out(g.order());
  for (std::uint32_t m : rec.members.toVector()) out.set(g.conjugate(w, m));
  return out;
}

AxiomReport verifySolubilizerAxioms(SolubilizerSet& set) {
  AxiomReport report;
  const Group& g = set.group();
  const auto& records = set.all();
  bool sawNonSubgroup = false;
  for (const SolubilizerRecord& r : records) {
    const std::string tag = g.spec().text() + " class#" + std::to_string(r.classIndex) +
                            " (element order " + std::to_string(r.elementOrder) + ")";
    if (!r.members.test(g.identity())) report.fail(tag + ": identity not in solubilizer");
    if (!r.members.test(r.representative)) report.fail(tag + ": representative missing");
    for (std::uint32_t c : g.cyclicSubgroup(r.representative))
      if (!r.members.test(c)) report.fail(tag + ": generated cyclic subgroup escapes");
    for (std::uint32_t c : g.cyclicNormalizer(r.representative))
      if (!r.members.test(c)) report.fail(tag + ": cyclic normalizer escapes");
    if (r.size != static_cast<long long>(r.members.count()))
      report.fail(tag + ": recorded size differs from member count");
    if (r.size % r.elementOrder != 0)
      report.fail(tag + ": element order does not divide the solubilizer size");
    if (r.normalizerOrder != g.classes()[static_cast<std::size_t>(r.classIndex)].normalizerOrder)
      report.fail(tag + ": normalizer order inconsistent with the class table");
    if (!r.isSubgroup) sawNonSubgroup = true;
    if (r.isSubgroup && r.classIndex != 0 && r.size < g.order() && !r.isSoluble)
      report.fail(tag + ": a proper subgroup solubilizer must be soluble");
  }
  for (const SolubilizerRecord& a : records)
    for (const SolubilizerRecord& b : records) {
      if (a.members.test(b.representative) != b.members.test(a.representative))
        report.fail(g.spec().text() + ": symmetry broken between class reps " +
                    std::to_string(a.representative) + " and " +
                    std::to_string(b.representative));
    }
  if (groupIsInsoluble(g) && !sawNonSubgroup)
    report.fail(g.spec().text() + ": expected at least one class whose solubilizer is not closed");
  return report;
}

AxiomReport spotCheckConjugation(SolubilizerSet& set, int perClass, std::uint64_t seed) {
  AxiomReport report;
  const Group& g = set.group();
  XorShift64 rng(seed);
  for (const ConjugacyClass& cls : g.classes()) {
    for (int k = 0; k < perClass; ++k) {
      const std::uint32_t y = cls.members[rng.below(cls.members.size())];
      PairSolubility engine(g, y, set.mode());
      IndexSet direct(g.order());
      for (std::uint32_t z = 0; z < static_cast<std::uint32_t>(g.order()); ++z)
        if (engine.soluble(z)) direct.set(z);
      if (!(direct == set.membersOf(y)))
        report.fail(g.spec().text() + ": conjugated record differs from a direct scan at element " +
                    std::to_string(y));
    }
  }
  return report;
}

ConjectureReport scanConjectures(SolubilizerSet& set) {
  ConjectureReport report;
  const Group& g = set.group();
  if (!groupIsInsoluble(g)) {
    report.notes.push_back(g.spec().text() +
                           ": soluble group, every solubilizer is the whole group; scan skipped");
    return report;
  }
  const Rational threeFifths(3, 5);
  const Rational half(1, 2);
  for (const SolubilizerRecord& r : set.all()) {
    if (r.classIndex == 0 || r.elementOrder == 1) continue;
    const std::string tag = g.spec().text() + " order-" + std::to_string(r.elementOrder) +
                            " class#" + std::to_string(r.classIndex);
    if (r.size % r.normalizerOrder != 0)
      report.violations.push_back(tag + ": normalizer order " + std::to_string(r.normalizerOrder) +
                                  " does not divide the size " + std::to_string(r.size));
    const SizeClass sc = classifySize(r.size);
    if (sc == SizeClass::P || sc == SizeClass::PSquared || sc == SizeClass::OddPrimePower)
      report.violations.push_back(tag + ": size " + std::to_string(r.size) + " is a " +
                                  sizeClassName(sc));
    else if (sc == SizeClass::PowerOfTwo)
      report.notes.push_back(tag + ": size " + std::to_string(r.size) + " is a power of two");
    if (threeFifths < r.probability) {
      report.violations.push_back(tag + ": probability " + r.probability.str() +
                                  " exceeds the 3/5 bound");
    } else if (r.probability == threeFifths) {
      if (g.spec().text() == "psl2:4" && r.elementOrder == 2)
        report.notes.push_back(tag + ": probability attains the extremal 3/5 bound");
      else
        report.violations.push_back(tag + ": probability equals 3/5 outside the extremal case");
    }
    if (r.elementOrder != 2 && !(r.probability < half))
      report.violations.push_back(tag + ": non-involution probability " + r.probability.str() +
                                  " is not below 1/2");
  }
  report.ok = report.violations.empty();
  return report;
}

}  // namespace solcheck
