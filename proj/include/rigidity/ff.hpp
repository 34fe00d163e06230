#pragma once

#include <cstdint>
#include <vector>

namespace rigidity::ff {

// Arithmetic in F_q for the Mersenne prime q = 2^61 - 1. Random points in
// F_q stand in for generic real coordinates; the rank of any matrix whose
// entries are low-degree polynomial evaluations matches the generic rank
// except with probability O(degree/q) per trial (Schwartz–Zippel).
inline constexpr uint64_t kPrime = (uint64_t(1) << 61) - 1;

inline uint64_t reduce(unsigned __int128 x) {
  uint64_t r = uint64_t(x & kPrime) + uint64_t(x >> 61);
  if (r >= kPrime) r -= kPrime;
  // x < 2^122 leaves at most one more fold
  if (r >= kPrime) r -= kPrime;
  return r;
}

inline uint64_t add(uint64_t a, uint64_t b) {
  uint64_t r = a + b;
  if (r >= kPrime) r -= kPrime;
  return r;
}
inline uint64_t sub(uint64_t a, uint64_t b) {
  return a >= b ? a - b : a + kPrime - b;
}
inline uint64_t neg(uint64_t a) { return a ? kPrime - a : 0; }
inline uint64_t mul(uint64_t a, uint64_t b) {
  return reduce((unsigned __int128)a * b);
}

uint64_t pow(uint64_t base, uint64_t exp);
uint64_t inv(uint64_t a);  // a != 0

// Dense row-major matrix over F_q. Single-owner mutable during elimination.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  uint64_t& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  uint64_t at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }
  uint64_t* row(int r) { return a_.data() + size_t(r) * cols_; }
  const uint64_t* row(int r) const { return a_.data() + size_t(r) * cols_; }

  Matrix transposed() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<uint64_t> a_;
};

// Rank by Gaussian elimination with the first nonzero entry of each column
// as pivot. Destructive on the argument. If stop_at > 0, returns as soon as
// the rank reaches stop_at.
int rank_destructive(Matrix& m, int stop_at = -1);
inline int rank(Matrix m, int stop_at = -1) { return rank_destructive(m, stop_at); }

}  // namespace rigidity::ff
