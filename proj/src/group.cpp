#include "solcheck/group.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace solcheck {

namespace {

constexpr long long kGroupOrderCap = 1 << 16;
constexpr std::uint64_t kEmptySlot = ~std::uint64_t{0};
// full multiplication table below this order; the exhaustive pair scans on
// the small groups are multiplication-bound
constexpr long long kMulTableCap = 1200;

bool isPrime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct PrimePower {
  long long p = 0;
  int n = 0;
};

std::optional<PrimePower> factorPrimePower(long long q) {
  if (q < 2) return std::nullopt;
  long long p = q;
  for (long long d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  int n = 0;
  long long t = q;
  while (t % p == 0) {
    t /= p;
    ++n;
  }
  if (t != 1) return std::nullopt;
  return PrimePower{p, n};
}

void validateSpec(const GroupSpec& spec) {
  auto pp = factorPrimePower(spec.fieldOrder);
  if (!pp) throw std::invalid_argument("field order must be a prime power >= 2");
  switch (spec.family) {
    case Family::Psl2:
      break;
    case Family::Psl3:
      if ((spec.fieldOrder - 1) % 3 == 0)
        throw std::invalid_argument("psl3 supported only with trivial center");
      break;
    case Family::Psl4:
      if (spec.fieldOrder % 2 != 0)
        throw std::invalid_argument("psl4 supported only with trivial center");
      break;
    case Family::Sz:
      if (pp->p != 2 || pp->n % 2 == 0)
        throw std::invalid_argument("sz requires field order 2^(2m+1)");
      break;
  }
}

std::vector<std::vector<std::uint16_t>> generatorMatrices(const GroupSpec& spec,
                                                          const FiniteField& f) {
  int d = spec.dimension();
  int d2 = d * d;
  auto zero = [&] { return std::vector<std::uint16_t>(d2, 0); };
  auto ident = [&] {
    auto m = zero();
    for (int i = 0; i < d; ++i) m[i * d + i] = 1;
    return m;
  };
  std::vector<std::vector<std::uint16_t>> out;
  switch (spec.family) {
    case Family::Psl2: {
      auto u = ident();
      u[1] = 1;  // [[1,1],[0,1]]
      auto w = zero();
      w[1] = 1;
      w[2] = static_cast<std::uint16_t>(f.neg(1));  // [[0,1],[-1,0]]
      out = {u, w};
      int g = f.generator();
      if (g != 1) {
        auto t = zero();
        t[0] = static_cast<std::uint16_t>(g);
        t[3] = static_cast<std::uint16_t>(f.inverse(g));
        out.push_back(t);
      }
      break;
    }
    case Family::Psl3:
    case Family::Psl4: {
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          if (i == j) continue;
          auto m = ident();
          m[i * d + j] = 1;
          out.push_back(m);
        }
      break;
    }
    case Family::Sz: {
      int n = factorPrimePower(spec.fieldOrder)->n;
      int m = (n - 1) / 2;
      long long sigmaExp = 1LL << (m + 1);  // x -> x^(2^(m+1)), sigma^2 = squaring
      auto sig = [&](int x) { return f.pow(x, sigmaExp); };
      auto uab = [&](int a, int b) {
        auto u = ident();
        int as = sig(a);
        u[1] = static_cast<std::uint16_t>(a);
        u[2] = static_cast<std::uint16_t>(f.add(f.mul(as, a), b));
        u[3] = static_cast<std::uint16_t>(
            f.add(f.add(f.mul(as, f.mul(a, a)), f.mul(a, b)), sig(b)));
        u[6] = static_cast<std::uint16_t>(as);
        u[7] = static_cast<std::uint16_t>(b);
        u[11] = static_cast<std::uint16_t>(a);
        return u;
      };
      out.push_back(uab(1, 0));
      out.push_back(uab(0, 1));
      int z = f.generator();
      if (z != 1) {
        long long k = 1LL << m;
        auto t = zero();
        t[0] = static_cast<std::uint16_t>(f.pow(z, 1 + k));
        t[5] = static_cast<std::uint16_t>(f.pow(z, k));
        t[10] = static_cast<std::uint16_t>(f.inverse(f.pow(z, k)));
        t[15] = static_cast<std::uint16_t>(f.inverse(f.pow(z, 1 + k)));
        out.push_back(t);
      }
      auto w = zero();
      w[3] = w[6] = w[9] = w[12] = 1;  // antidiagonal involution
      out.push_back(w);
      break;
    }
  }
  return out;
}

// matrix inverse over the field by Gauss-Jordan elimination, d <= 4
void matInverse(const FiniteField& f, int d, const std::uint16_t* in, std::uint16_t* out) {
  int a[4][8];
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      a[i][j] = in[i * d + j];
      a[i][d + j] = (i == j) ? 1 : 0;
    }
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int r = col; r < d; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::logic_error("singular matrix");
    if (piv != col)
      for (int j = 0; j < 2 * d; ++j) std::swap(a[piv][j], a[col][j]);
    int inv = f.inverse(a[col][col]);
    for (int j = 0; j < 2 * d; ++j) a[col][j] = f.mul(a[col][j], inv);
    for (int r = 0; r < d; ++r) {
      if (r == col || a[r][col] == 0) continue;
      int c = a[r][col];
      for (int j = 0; j < 2 * d; ++j) a[r][j] = f.sub(a[r][j], f.mul(c, a[col][j]));
    }
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out[i * d + j] = static_cast<std::uint16_t>(a[i][d + j]);
}

}  // namespace

GroupSpec GroupSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("expected family:q");
  std::string fam = text.substr(0, colon);
  std::string num = text.substr(colon + 1);
  GroupSpec spec;
  if (fam == "psl2")
    spec.family = Family::Psl2;
  else if (fam == "psl3")
    spec.family = Family::Psl3;
  else if (fam == "psl4")
    spec.family = Family::Psl4;
  else if (fam == "sz")
    spec.family = Family::Sz;
  else
    throw std::invalid_argument("unknown family: " + fam);
  if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("bad field order: " + num);
  spec.fieldOrder = std::stoll(num);
  validateSpec(spec);
  return spec;
}

std::string GroupSpec::text() const {
  const char* fam = "";
  switch (family) {
    case Family::Psl2: fam = "psl2"; break;
    case Family::Psl3: fam = "psl3"; break;
    case Family::Psl4: fam = "psl4"; break;
    case Family::Sz: fam = "sz"; break;
  }
  return std::string(fam) + ":" + std::to_string(fieldOrder);
}

bool GroupSpec::minimalSimple() const {
  auto pp = factorPrimePower(fieldOrder);
  if (!pp) return false;
  switch (family) {
    case Family::Psl2:
      if (pp->p == 2) return isPrime(pp->n);
      if (pp->p == 3) return pp->n >= 3 && isPrime(pp->n);
      return pp->n == 1 && pp->p > 3 && (pp->p % 5 == 2 || pp->p % 5 == 3);
    case Family::Psl3:
      return fieldOrder == 3;
    case Family::Psl4:
      return false;
    case Family::Sz:
      return pp->p == 2 && pp->n >= 3 && isPrime(pp->n);
  }
  return false;
}

long long GroupSpec::expectedOrder() const {
  long long q = fieldOrder;
  switch (family) {
    case Family::Psl2:
      return q * (q - 1) * (q + 1) / (q % 2 == 1 ? 2 : 1);
    case Family::Psl3:
      return q * q * q * (q * q * q - 1) * (q * q - 1) / std::gcd<long long>(3, q - 1);
    case Family::Psl4: {
      long long q2 = q * q, q3 = q2 * q, q4 = q2 * q2, q6 = q3 * q3;
      return q6 * (q4 - 1) * (q3 - 1) * (q2 - 1) / std::gcd<long long>(4, q - 1);
    }
    case Family::Sz:
      return q * q * (q - 1) * (q * q + 1);
  }
  return 0;
}

int GroupSpec::dimension() const {
  switch (family) {
    case Family::Psl2: return 2;
    case Family::Psl3: return 3;
    default: return 4;
  }
}

std::shared_ptr<const Group> Group::build(const GroupSpec& spec) {
  validateSpec(spec);
  if (spec.expectedOrder() > kGroupOrderCap)
    throw std::invalid_argument("group order " + std::to_string(spec.expectedOrder()) +
                                " exceeds the enumeration cap");
  auto pp = factorPrimePower(spec.fieldOrder);
  std::shared_ptr<Group> g(new Group());
  g->spec_ = spec;
  g->field_ = FiniteField::get(pp->p, pp->n);
  g->dim_ = spec.dimension();
  g->bitsPerEntry_ = std::bit_width(static_cast<unsigned>(spec.fieldOrder - 1));
  if (g->dim_ * g->dim_ * g->bitsPerEntry_ > 64)
    throw std::invalid_argument("matrix coding exceeds 64 bits");
  g->buildElements();
  g->buildClasses();
  return g;
}

std::shared_ptr<const Group> Group::build(const std::string& specText) {
  return build(GroupSpec::parse(specText));
}

std::uint64_t Group::packMatrix(const std::uint16_t* m) const {
  std::uint64_t key = 0;
  int d2 = dim_ * dim_;
  for (int i = 0; i < d2; ++i) key = (key << bitsPerEntry_) | m[i];
  return key;
}

void Group::canonicalize(std::uint16_t* m) const {
  if (spec_.family != Family::Psl2 || field_->characteristic() == 2) return;
  // projective representative: of M and -M keep the one whose first nonzero
  // entry has the smaller code
  int d2 = dim_ * dim_;
  for (int i = 0; i < d2; ++i) {
    if (m[i] == 0) continue;
    if (field_->neg(m[i]) < m[i])
      for (int j = i; j < d2; ++j) m[j] = static_cast<std::uint16_t>(field_->neg(m[j]));
    break;
  }
}

std::uint32_t Group::indexOfPacked(std::uint64_t key) const {
  std::size_t i = (key * 0x9E3779B97F4A7C15ull >> 32) & hashMask_;
  while (true) {
    std::uint64_t k = hashKeys_[i];
    if (k == key) return hashVals_[i];
    if (k == kEmptySlot) throw std::logic_error("matrix outside the enumerated group");
    i = (i + 1) & hashMask_;
  }
}

void Group::multiplyRaw(const std::uint16_t* a, const std::uint16_t* b,
                        std::uint16_t* out) const {
  const FiniteField& f = *field_;
  int d = dim_;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      int s = 0;
      for (int k = 0; k < d; ++k) s = f.add(s, f.mul(a[i * d + k], b[k * d + j]));
      out[i * d + j] = static_cast<std::uint16_t>(s);
    }
}

std::uint32_t Group::mul(std::uint32_t a, std::uint32_t b) const {
  if (!mulTable_.empty())
    return mulTable_[static_cast<std::size_t>(a) * packed_.size() + b];
  std::uint16_t prod[16];
  multiplyRaw(matrixOf(a), matrixOf(b), prod);
  canonicalize(prod);
  return indexOfPacked(packMatrix(prod));
}

void Group::buildElements() {
  long long expected = spec_.expectedOrder();
  int d = dim_, d2 = d * d;
  auto gens = generatorMatrices(spec_, *field_);
  for (auto& gm : gens) canonicalize(gm.data());

  std::size_t cap = 16;
  while (cap < static_cast<std::size_t>(expected) * 4) cap <<= 1;
  hashKeys_.assign(cap, kEmptySlot);
  hashVals_.assign(cap, 0);
  hashMask_ = cap - 1;

  std::vector<std::uint64_t> keys;
  std::vector<std::uint16_t> mats;
  keys.reserve(expected + 8);
  mats.reserve((expected + 8) * d2);
  auto tryInsert = [&](const std::uint16_t* m) {
    std::uint64_t key = packMatrix(m);
    std::size_t i = (key * 0x9E3779B97F4A7C15ull >> 32) & hashMask_;
    while (true) {
      if (hashKeys_[i] == key) return;
      if (hashKeys_[i] == kEmptySlot) break;
      i = (i + 1) & hashMask_;
    }
    hashKeys_[i] = key;
    hashVals_[i] = static_cast<std::uint32_t>(keys.size());
    keys.push_back(key);
    mats.insert(mats.end(), m, m + d2);
  };

  std::vector<std::uint16_t> ident(d2, 0);
  for (int i = 0; i < d; ++i) ident[i * d + i] = 1;
  canonicalize(ident.data());
  tryInsert(ident.data());
  for (const auto& gm : gens) tryInsert(gm.data());

  std::vector<std::uint16_t> cur(d2), prod(d2);
  for (std::size_t idx = 0; idx < keys.size(); ++idx) {
    if (static_cast<long long>(keys.size()) > expected)
      throw std::runtime_error("enumeration exceeded the expected order of " + spec_.text());
    std::copy_n(mats.begin() + idx * d2, d2, cur.begin());
    for (const auto& gm : gens) {
      multiplyRaw(cur.data(), gm.data(), prod.data());
      canonicalize(prod.data());
      tryInsert(prod.data());
    }
  }
  if (static_cast<long long>(keys.size()) != expected)
    throw std::runtime_error("enumerated " + std::to_string(keys.size()) + " elements for " +
                             spec_.text() + ", expected " + std::to_string(expected));

  // identity at index 0, the rest in increasing packed order
  std::uint64_t idKey = packMatrix(ident.data());
  std::sort(keys.begin(), keys.end());
  auto pos = std::lower_bound(keys.begin(), keys.end(), idKey);
  std::rotate(keys.begin(), pos, pos + 1);
  packed_ = std::move(keys);

  std::fill(hashKeys_.begin(), hashKeys_.end(), kEmptySlot);
  for (std::size_t i = 0; i < packed_.size(); ++i) {
    std::uint64_t key = packed_[i];
    std::size_t slot = (key * 0x9E3779B97F4A7C15ull >> 32) & hashMask_;
    while (hashKeys_[slot] != kEmptySlot) slot = (slot + 1) & hashMask_;
    hashKeys_[slot] = key;
    hashVals_[slot] = static_cast<std::uint32_t>(i);
  }

  long long order = static_cast<long long>(packed_.size());
  matrices_.assign(order * d2, 0);
  std::uint64_t mask = (std::uint64_t{1} << bitsPerEntry_) - 1;
  for (long long i = 0; i < order; ++i)
    for (int e = 0; e < d2; ++e)
      matrices_[i * d2 + e] = static_cast<std::uint16_t>(
          (packed_[i] >> (bitsPerEntry_ * (d2 - 1 - e))) & mask);

  if (order <= kMulTableCap) {
    mulTable_.resize(static_cast<std::size_t>(order) * order);
    std::vector<std::uint16_t> buf(d2);
    for (long long a = 0; a < order; ++a)
      for (long long b = 0; b < order; ++b) {
        multiplyRaw(matrixOf(a), matrixOf(b), buf.data());
        canonicalize(buf.data());
        mulTable_[a * order + b] =
            static_cast<std::uint16_t>(indexOfPacked(packMatrix(buf.data())));
      }
  }

  inverse_.resize(order);
  std::vector<std::uint16_t> buf(d2);
  for (long long a = 0; a < order; ++a) {
    matInverse(*field_, d, matrixOf(a), buf.data());
    canonicalize(buf.data());
    inverse_[a] = indexOfPacked(packMatrix(buf.data()));
  }

  orders_.resize(order);
  involutions_ = 0;
  for (std::uint32_t a = 0; a < order; ++a) {
    int k = 1;
    std::uint32_t acc = a;
    while (acc != 0) {
      acc = mul(acc, a);
      ++k;
    }
    orders_[a] = k;
    if (k == 2) ++involutions_;
  }

  generators_.clear();
  for (const auto& gm : gens) {
    std::uint32_t idx = indexOfPacked(packMatrix(gm.data()));
    if (idx != 0 && std::find(generators_.begin(), generators_.end(), idx) == generators_.end())
      generators_.push_back(idx);
  }
}

void Group::buildClasses() {
  long long order = static_cast<long long>(packed_.size());
  classOf_.assign(order, -1);
  conjugator_.assign(order, 0);
  for (std::uint32_t a = 0; a < order; ++a) {
    if (classOf_[a] != -1) continue;
    int ci = static_cast<int>(classes_.size());
    std::vector<std::uint32_t> queue{a};
    classOf_[a] = ci;
    conjugator_[a] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      std::uint32_t m = queue[qi];
      std::uint32_t w = conjugator_[m];
      for (std::uint32_t t : generators_) {
        std::uint32_t m2 = conjugate(t, m);
        if (classOf_[m2] == -1) {
          classOf_[m2] = ci;
          conjugator_[m2] = mul(w, t);
          queue.push_back(m2);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    ConjugacyClass c;
    c.representative = a;
    c.elementOrder = orders_[a];
    c.members = std::move(queue);

    std::vector<char> inCyc(order, 0);
    for (std::uint32_t x : cyclicSubgroup(a)) inCyc[x] = 1;
    long long nrm = 0;
    for (std::uint32_t x = 0; x < order; ++x)
      if (inCyc[conjugate(x, a)]) ++nrm;
    c.normalizerOrder = nrm;
    classes_.push_back(std::move(c));
  }
}

std::vector<std::uint32_t> Group::cyclicSubgroup(std::uint32_t a) const {
  std::vector<std::uint32_t> out{0};
  std::uint32_t acc = a;
  while (acc != 0) {
    out.push_back(acc);
    acc = mul(acc, a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> Group::cyclicNormalizer(std::uint32_t a) const {
  std::vector<char> inCyc(packed_.size(), 0);
  for (std::uint32_t x : cyclicSubgroup(a)) inCyc[x] = 1;
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < packed_.size(); ++x)
    if (inCyc[conjugate(x, a)]) out.push_back(x);
  return out;
}

std::string Group::elementRepr(std::uint32_t a) const {
  const std::uint16_t* m = matrixOf(a);
  std::string out = "[";
  for (int i = 0; i < dim_; ++i) {
    out += (i ? ",[" : "[");
    for (int j = 0; j < dim_; ++j) {
      if (j) out += ",";
      out += field_->elementName(m[i * dim_ + j]);
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace solcheck
