#include "rigidity/ff.hpp"

namespace rigidity::ff {

uint64_t pow(uint64_t base, uint64_t exp) {
  uint64_t r = 1;
  while (exp) {
    if (exp & 1) r = mul(r, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return r;
}

uint64_t inv(uint64_t a) { return pow(a, kPrime - 2); }

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

int rank_destructive(Matrix& m, int stop_at) {
  int rows = m.rows(), cols = m.cols();
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = col; c < cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    uint64_t pinv = inv(m.at(rank, col));
    const uint64_t* prow = m.row(rank);
    for (int r = rank + 1; r < rows; ++r) {
      uint64_t head = m.at(r, col);
      if (head == 0) continue;
      uint64_t f = mul(head, pinv);
      uint64_t* row = m.row(r);
      row[col] = 0;
      for (int c = col + 1; c < cols; ++c)
        if (prow[c]) row[c] = sub(row[c], mul(f, prow[c]));
    }
    ++rank;
    if (stop_at > 0 && rank >= stop_at) return rank;
  }
  return rank;
}

}  // namespace rigidity::ff
