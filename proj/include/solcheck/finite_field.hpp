#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace solcheck {

// GF(p^n) with a canonical modulus: the lexicographically least monic
// irreducible of degree n, coefficient sequence compared from the constant
// term upward. Elements are integer codes 0..p^n-1, digits base p with the
// constant coefficient as the least significant digit.
class FiniteField {
 public:
  FiniteField(long long characteristic, int degree);

  // shared, cached instances keyed by (characteristic, degree)
  static std::shared_ptr<const FiniteField> get(long long characteristic, int degree);

  long long order() const { return order_; }
  long long characteristic() const { return p_; }
  int degree() const { return degree_; }

  int add(int a, int b) const {
    if (p_ == 2) return a ^ b;
    if (!addTable_.empty()) return addTable_[a * order_ + b];
    return addSlow(a, b);
  }
  int neg(int a) const { return negTable_.empty() ? negSlow(a) : negTable_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const {
    if (!mulTable_.empty()) return mulTable_[a * order_ + b];
    return mulSlow(a, b);
  }
  int inverse(int a) const;  // a != 0
  int pow(int a, long long e) const;
  int multiplicativeOrder(int a) const;  // a != 0
  int generator() const { return generator_; }

  // modulus coefficients, constant term first, including the leading 1;
  // empty for degree 1
  const std::vector<int>& modulus() const { return modulus_; }

  std::string elementName(int code) const;

 private:
  int addSlow(int a, int b) const;
  int negSlow(int a) const;
  int mulSlow(int a, int b) const;

  long long p_;
  int degree_;
  long long order_;
  std::vector<int> modulus_;
  std::vector<std::uint16_t> mulTable_;  // built for order <= 8192
  std::vector<std::uint16_t> addTable_;  // built for order <= 1024 and odd p
  std::vector<std::uint16_t> negTable_;
  std::vector<std::uint16_t> invTable_;
  int generator_;
};

// Value handle tying an element code to its owning field; mixed-field
// arithmetic is an error.
struct FieldElement {
  const FiniteField* field = nullptr;
  int code = 0;

  FieldElement() = default;
  FieldElement(const FiniteField& f, int c) : field(&f), code(c) {}

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement inverse() const;
  bool operator==(const FieldElement& o) const;
};

}  // namespace solcheck
