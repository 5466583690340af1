#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace solcheck {

// Fixed-capacity bitset over element indices 0..n-1.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  std::size_t capacity() const { return size_; }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  IndexSet& operator|=(const IndexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  IndexSet& operator&=(const IndexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  bool operator==(const IndexSet& o) const {
    return size_ == o.size_ && words_ == o.words_;
  }

  bool containsAll(const IndexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((o.words_[i] & ~words_[i]) != 0) return false;
    return true;
  }

  std::vector<std::uint32_t> toVector() const {
    std::vector<std::uint32_t> v;
    v.reserve(count());
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        unsigned b = std::countr_zero(w);
        v.push_back(static_cast<std::uint32_t>((wi << 6) + b));
        w &= w - 1;
      }
    }
    return v;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace solcheck
