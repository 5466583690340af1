#include "solcheck/finite_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace solcheck {

namespace {

constexpr long long kOrderCap = 1 << 20;

bool isPrime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// dense coefficient vectors over GF(p), constant term first
using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly mulPoly(const Poly& a, const Poly& b, long long p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<int>((out[i + j] + 1LL * a[i] * b[j]) % p);
  trim(out);
  return out;
}

// remainder of a by monic m
Poly remPoly(Poly a, const Poly& m, long long p) {
  while (a.size() >= m.size()) {
    long long lead = a.back();
    std::size_t shift = a.size() - m.size();
    if (lead != 0)
      for (std::size_t i = 0; i < m.size(); ++i) {
        long long v = (a[shift + i] - lead * m[i]) % p;
        a[shift + i] = static_cast<int>(v < 0 ? v + p : v);
      }
    a.pop_back();
  }
  trim(a);
  return a;
}

bool dividesPoly(const Poly& d, const Poly& f, long long p) {
  return remPoly(f, d, p).empty();
}

// trial division by every monic polynomial of degree 1..deg(f)/2
bool isIrreducible(const Poly& f, long long p) {
  int n = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= n; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      Poly divisor(d + 1, 0);
      long long t = code;
      for (int i = 0; i < d; ++i) {
        divisor[i] = static_cast<int>(t % p);
        t /= p;
      }
      divisor[d] = 1;
      if (dividesPoly(divisor, f, p)) return false;
    }
  }
  return true;
}

// least monic irreducible of the given degree, coefficient sequences
// compared from the constant term upward
Poly canonicalModulus(long long p, int degree) {
  long long count = 1;
  for (int i = 0; i < degree; ++i) count *= p;
  for (long long rank = 0; rank < count; ++rank) {
    Poly cand(degree + 1, 0);
    long long t = rank;
    // decode so that the constant coefficient is the most significant digit
    // of rank: scanning rank upward walks the constant-first lex order
    for (int i = degree - 1; i >= 0; --i) {
      cand[i] = static_cast<int>(t % p);
      t /= p;
    }
    cand[degree] = 1;
    if (isIrreducible(cand, p)) return cand;
  }
  throw std::logic_error("no irreducible polynomial found");
}

Poly codeToPoly(long long code, long long p, int degree) {
  Poly c(degree, 0);
  for (int i = 0; i < degree; ++i) {
    c[i] = static_cast<int>(code % p);
    code /= p;
  }
  trim(c);
  return c;
}

int polyToCode(const Poly& c, long long p) {
  long long code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * p + c[i];
  return static_cast<int>(code);
}

}  // namespace

FiniteField::FiniteField(long long characteristic, int degree)
    : p_(characteristic), degree_(degree) {
  if (!isPrime(p_)) throw std::invalid_argument("characteristic must be prime");
  if (degree_ < 1) throw std::invalid_argument("degree must be positive");
  order_ = 1;
  for (int i = 0; i < degree_; ++i) {
    order_ *= p_;
    if (order_ > kOrderCap) throw std::invalid_argument("field order exceeds 2^20");
  }
  if (degree_ > 1) modulus_ = canonicalModulus(p_, degree_);

  negTable_.resize(order_);
  for (long long a = 0; a < order_; ++a)
    negTable_[a] = static_cast<std::uint16_t>(negSlow(static_cast<int>(a)));

  if (order_ <= 8192) {
    mulTable_.resize(order_ * order_);
    for (long long a = 0; a < order_; ++a)
      for (long long b = a; b < order_; ++b) {
        int v = mulSlow(static_cast<int>(a), static_cast<int>(b));
        mulTable_[a * order_ + b] = static_cast<std::uint16_t>(v);
        mulTable_[b * order_ + a] = static_cast<std::uint16_t>(v);
      }
    invTable_.assign(order_, 0);
    for (long long a = 1; a < order_; ++a)
      for (long long b = 1; b < order_; ++b)
        if (mulTable_[a * order_ + b] == 1) {
          invTable_[a] = static_cast<std::uint16_t>(b);
          break;
        }
  }
  if (order_ <= 1024 && p_ != 2) {
    addTable_.resize(order_ * order_);
    for (long long a = 0; a < order_; ++a)
      for (long long b = 0; b < order_; ++b)
        addTable_[a * order_ + b] =
            static_cast<std::uint16_t>(addSlow(static_cast<int>(a), static_cast<int>(b)));
  }

  generator_ = 1;
  for (int a = 1; a < order_; ++a)
    if (multiplicativeOrder(a) == order_ - 1) {
      generator_ = a;
      break;
    }
}

std::shared_ptr<const FiniteField> FiniteField::get(long long characteristic, int degree) {
  static std::mutex mx;
  static std::map<std::pair<long long, int>, std::shared_ptr<const FiniteField>> cache;
  std::lock_guard<std::mutex> lock(mx);
  auto key = std::make_pair(characteristic, degree);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<const FiniteField>(characteristic, degree);
  cache.emplace(key, f);
  return f;
}

int FiniteField::addSlow(int a, int b) const {
  if (degree_ == 1) return static_cast<int>((a + b) % p_);
  long long out = 0, mult = 1;
  long long x = a, y = b;
  for (int i = 0; i < degree_; ++i) {
    out += mult * ((x % p_ + y % p_) % p_);
    x /= p_;
    y /= p_;
    mult *= p_;
  }
  return static_cast<int>(out);
}

int FiniteField::negSlow(int a) const {
  if (degree_ == 1) return static_cast<int>((p_ - a) % p_);
  long long out = 0, mult = 1, x = a;
  for (int i = 0; i < degree_; ++i) {
    out += mult * ((p_ - x % p_) % p_);
    x /= p_;
    mult *= p_;
  }
  return static_cast<int>(out);
}

int FiniteField::mulSlow(int a, int b) const {
  if (degree_ == 1) return static_cast<int>((1LL * a * b) % p_);
  Poly pa = codeToPoly(a, p_, degree_);
  Poly pb = codeToPoly(b, p_, degree_);
  return polyToCode(remPoly(mulPoly(pa, pb, p_), modulus_, p_), p_);
}

int FiniteField::inverse(int a) const {
  if (a == 0) throw std::invalid_argument("inverse of zero");
  if (!invTable_.empty()) return invTable_[a];
  // extended Euclid on polynomials: maintain s with s*a = r (mod modulus)
  auto intInverse = [this](long long value) {
    long long t = 0, newT = 1, r = p_, newR = value;
    while (newR != 0) {
      long long qq = r / newR;
      long long tmp = t - qq * newT;
      t = newT;
      newT = tmp;
      tmp = r - qq * newR;
      r = newR;
      newR = tmp;
    }
    return t < 0 ? t + p_ : t;
  };
  if (degree_ == 1) return static_cast<int>(intInverse(a));
  // polynomial case: gcd(a, modulus) = 1 since modulus is irreducible
  Poly r0 = modulus_, r1 = codeToPoly(a, p_, degree_);
  Poly s0 = {}, s1 = {1};
  auto scale = [&](const Poly& v, long long c) {
    Poly out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      out[i] = static_cast<int>((v[i] * c) % p_);
    trim(out);
    return out;
  };
  auto subPoly = [&](Poly x, const Poly& y) {
    if (y.size() > x.size()) x.resize(y.size(), 0);
    for (std::size_t i = 0; i < y.size(); ++i) {
      long long v = (x[i] - y[i]) % p_;
      x[i] = static_cast<int>(v < 0 ? v + p_ : v);
    }
    trim(x);
    return x;
  };
  while (!r1.empty()) {
    // divide r0 by r1
    Poly q;
    Poly rem = r0;
    long long leadInv = intInverse(r1.back());
    while (rem.size() >= r1.size() && !rem.empty()) {
      std::size_t shift = rem.size() - r1.size();
      long long coef = (rem.back() * leadInv) % p_;
      if (q.size() < shift + 1) q.resize(shift + 1, 0);
      q[shift] = static_cast<int>(coef);
      for (std::size_t i = 0; i < r1.size(); ++i) {
        long long v = (rem[shift + i] - coef * r1[i]) % p_;
        rem[shift + i] = static_cast<int>(v < 0 ? v + p_ : v);
      }
      while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    Poly s2 = subPoly(s0, mulPoly(q, s1, p_));
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
  // r0 is the gcd, a nonzero constant; normalize s0 by its inverse
  long long c = r0.empty() ? 1 : r0[0];
  return polyToCode(scale(s0, intInverse(c)), p_);
}

int FiniteField::pow(int a, long long e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  int result = 1, base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

int FiniteField::multiplicativeOrder(int a) const {
  if (a == 0) throw std::invalid_argument("order of zero");
  int k = 1, acc = a;
  while (acc != 1) {
    acc = mul(acc, a);
    ++k;
  }
  return k;
}

std::string FiniteField::elementName(int code) const {
  if (degree_ == 1) return std::to_string(code);
  if (code == 0) return "0";
  Poly c = codeToPoly(code, p_, degree_);
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
    } else {
      if (c[i] != 1) out += std::to_string(c[i]);
      out += (i == 1) ? "x" : "x^" + std::to_string(i);
    }
  }
  return out;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  if (!field || field != o.field) throw std::invalid_argument("mixed-field addition");
  return FieldElement(*field, field->add(code, o.code));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  if (!field || field != o.field) throw std::invalid_argument("mixed-field subtraction");
  return FieldElement(*field, field->sub(code, o.code));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  if (!field || field != o.field) throw std::invalid_argument("mixed-field multiplication");
  return FieldElement(*field, field->mul(code, o.code));
}

FieldElement FieldElement::inverse() const {
  if (!field) throw std::invalid_argument("element without a field");
  return FieldElement(*field, field->inverse(code));
}

bool FieldElement::operator==(const FieldElement& o) const {
  return field == o.field && code == o.code;
}

}  // namespace solcheck
