#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "solcheck/finite_field.hpp"
#include "solcheck/index_set.hpp"

namespace solcheck {

enum class Family { Psl2, Psl3, Psl4, Sz };

struct GroupSpec {
  Family family = Family::Psl2;
  long long fieldOrder = 4;

  // accepts "psl2:27", "psl3:3", "psl4:2", "sz:8"; throws std::invalid_argument
  static GroupSpec parse(const std::string& text);
  std::string text() const;

  // Thompson's classification with its congruence conditions; false for e.g.
  // psl2:11, psl2:19, psl2:31, psl2:16, psl4:2.
  bool minimalSimple() const;
  long long expectedOrder() const;
  int dimension() const;

  bool operator==(const GroupSpec& o) const {
    return family == o.family && fieldOrder == o.fieldOrder;
  }
};

struct ConjugacyClass {
  std::uint32_t representative = 0;  // least element index in the class
  int elementOrder = 1;
  std::vector<std::uint32_t> members;  // ascending
  long long normalizerOrder = 0;       // |N_G(<rep>)|
};

// A finite matrix group enumerated explicitly. Elements are dense indices;
// index 0 is the identity and the remaining elements are sorted by the
// row-major integer coding of their canonical matrix. Canonical form for
// psl2 in odd characteristic picks the sign whose first nonzero entry has
// the smaller code.
class Group {
 public:
  static std::shared_ptr<const Group> build(const GroupSpec& spec);
  static std::shared_ptr<const Group> build(const std::string& specText);

  const GroupSpec& spec() const { return spec_; }
  long long order() const { return static_cast<long long>(packed_.size()); }
  std::uint32_t identity() const { return 0; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inverseOf(std::uint32_t a) const { return inverse_[a]; }
  // g^{-1} a g
  std::uint32_t conjugate(std::uint32_t g, std::uint32_t a) const {
    return mul(mul(inverse_[g], a), g);
  }
  int elementOrder(std::uint32_t a) const { return orders_[a]; }

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  int classIndexOf(std::uint32_t a) const { return classOf_[a]; }
  // g with a = g^{-1} rep g, rep the representative of a's class
  std::uint32_t conjugatorToRep(std::uint32_t a) const { return conjugator_[a]; }

  long long involutionCount() const { return involutions_; }

  std::vector<std::uint32_t> cyclicSubgroup(std::uint32_t a) const;
  std::vector<std::uint32_t> cyclicNormalizer(std::uint32_t a) const;

  const std::vector<std::uint32_t>& generators() const { return generators_; }
  int matrixDim() const { return dim_; }
  const FiniteField& field() const { return *field_; }

  // row-major entry codes, dim*dim of them
  const std::uint16_t* matrixOf(std::uint32_t a) const {
    return matrices_.data() + static_cast<std::size_t>(a) * dim_ * dim_;
  }
  std::string elementRepr(std::uint32_t a) const;

 private:
  Group() = default;
  void buildElements();
  void buildClasses();
  std::uint64_t packMatrix(const std::uint16_t* m) const;
  void canonicalize(std::uint16_t* m) const;
  std::uint32_t indexOfPacked(std::uint64_t key) const;
  void multiplyRaw(const std::uint16_t* a, const std::uint16_t* b,
                   std::uint16_t* out) const;

  GroupSpec spec_;
  std::shared_ptr<const FiniteField> field_;
  int dim_ = 2;
  int bitsPerEntry_ = 1;
  std::vector<std::uint64_t> packed_;     // canonical packed matrices, by index
  std::vector<std::uint16_t> matrices_;   // dim*dim entries per element
  std::vector<std::uint16_t> mulTable_;   // full Cayley table for small orders
  std::vector<std::uint32_t> inverse_;
  std::vector<int> orders_;
  std::vector<int> classOf_;
  std::vector<std::uint32_t> conjugator_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::uint32_t> generators_;
  long long involutions_ = 0;

  // open-addressing map from packed matrix to element index
  std::vector<std::uint64_t> hashKeys_;
  std::vector<std::uint32_t> hashVals_;
  std::uint64_t hashMask_ = 0;
};

}  // namespace solcheck
