#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace rigidity {

// Fixed-capacity dynamic bitset over 64-bit words. Vertex sets everywhere.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int capacity() const { return n_; }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[i >> 6] |= 1ULL << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
  void clear() { for (auto& w : w_) w = 0; }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& subtract(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset difference(Bitset a, const Bitset& b) { return a.subtract(b); }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

  bool intersects(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  bool is_subset_of(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  static int intersect_count(const Bitset& a, const Bitset& b) {
    int c = 0;
    for (size_t i = 0; i < a.w_.size(); ++i)
      c += std::popcount(a.w_[i] & b.w_[i]);
    return c;
  }
  // |a \ b|
  static int difference_count(const Bitset& a, const Bitset& b) {
    int c = 0;
    for (size_t i = 0; i < a.w_.size(); ++i)
      c += std::popcount(a.w_[i] & ~b.w_[i]);
    return c;
  }

  int find_first() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int(i * 64 + std::countr_zero(w_[i]));
    return -1;
  }
  int find_next(int i) const {
    ++i;
    if (i >= n_) return -1;
    size_t wi = size_t(i) >> 6;
    uint64_t w = w_[wi] >> (i & 63);
    if (w) return i + std::countr_zero(w);
    for (++wi; wi < w_.size(); ++wi)
      if (w_[wi]) return int(wi * 64 + std::countr_zero(w_[wi]));
    return -1;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v = find_first(); v >= 0; v = find_next(v)) out.push_back(v);
    return out;
  }

  static Bitset of(int n, const std::vector<int>& items) {
    Bitset b(n);
    for (int v : items) b.set(v);
    return b;
  }
  static Bitset full(int n) {
    Bitset b(n);
    for (int i = 0; i < n; ++i) b.set(i);
    return b;
  }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace rigidity
