#pragma once

#include <cstdint>
#include <vector>

#include "rigidity/ff.hpp"

namespace rigidity {

// (master_seed, stream_id) -> generator state is a pure function, so
// parallel trials with stream_id = trial index reproduce exactly.
struct RngSpec {
  uint64_t master_seed = 0;
  uint64_t stream_id = 0;
};

inline uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-mode generator: output i is a hash of (key, i), no sequential
// state beyond the counter.
class CounterRng {
 public:
  explicit CounterRng(RngSpec spec)
      : key_(mix64(mix64(spec.master_seed) ^ (spec.stream_id * 0xda942042e4dd58b5ULL + 1))) {}
  CounterRng(uint64_t master_seed, uint64_t stream_id)
      : CounterRng(RngSpec{master_seed, stream_id}) {}

  uint64_t next() { return mix64(key_ ^ (ctr_++ * 0x9e3779b97f4a7c15ULL)); }

  // Unbiased uniform in [0, n) by rejection.
  uint64_t below(uint64_t n);

  double uniform01() { return double(next() >> 11) * 0x1.0p-53; }

  uint64_t field_element();  // uniform in [0, q)

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = size_t(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // Pair-addressed hash: depends only on (key of spec, a, b).
  static uint64_t pair_hash(RngSpec spec, uint64_t a, uint64_t b);

 private:
  uint64_t key_;
  uint64_t ctr_ = 0;
};

// Deterministic pseudorandom "generic" points: count vectors of dim field
// elements. Same seed gives the same output.
std::vector<std::vector<uint64_t>> generic_points(int count, int dim,
                                                  uint64_t seed);

}  // namespace rigidity
