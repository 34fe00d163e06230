#include "rigidity/rng.hpp"

namespace rigidity {

uint64_t CounterRng::below(uint64_t n) {
  if (n == 0) return 0;
  uint64_t limit = ~uint64_t(0) - ~uint64_t(0) % n;
  uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

uint64_t CounterRng::field_element() {
  // top 61 bits, rejected down to [0, q)
  uint64_t x;
  do {
    x = next() >> 3;
  } while (x >= ff::kPrime);
  return x;
}

uint64_t CounterRng::pair_hash(RngSpec spec, uint64_t a, uint64_t b) {
  uint64_t key = mix64(mix64(spec.master_seed) ^
                       (spec.stream_id * 0xda942042e4dd58b5ULL + 1));
  return mix64(key ^ mix64(a * 0x9e3779b97f4a7c15ULL + b));
}

std::vector<std::vector<uint64_t>> generic_points(int count, int dim,
                                                  uint64_t seed) {
  CounterRng rng(seed, 0x67656e706fULL);  // dedicated stream for point sets
  std::vector<std::vector<uint64_t>> pts(count, std::vector<uint64_t>(dim));
  for (auto& p : pts)
    for (auto& x : p) x = rng.field_element();
  return pts;
}

}  // namespace rigidity
