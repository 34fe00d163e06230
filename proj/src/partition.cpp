#include "rigidity/partition.hpp"

#include "rigidity/errors.hpp"

namespace rigidity {

Partition::Partition(int n, std::vector<std::vector<int>> blocks) : n_(n) {
  if (blocks.empty()) throw Error("partition: no blocks");
  block_of_.assign(n, -1);
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].empty()) throw Error("partition: empty block");
    Bitset b(n);
    for (int v : blocks[i]) {
      if (v < 0 || v >= n) throw Error("partition: vertex out of range");
      if (block_of_[v] != -1) throw Error("partition: overlapping blocks");
      block_of_[v] = int(i);
      b.set(v);
    }
    blocks_.push_back(std::move(b));
  }
  for (int v = 0; v < n; ++v)
    if (block_of_[v] == -1) throw Error("partition: uncovered vertex");
}

Partition Partition::singletons(int n) {
  std::vector<std::vector<int>> blocks(n);
  for (int v = 0; v < n; ++v) blocks[v] = {v};
  return Partition(n, std::move(blocks));
}

Partition Partition::contiguous_equipartition(int n, int m) {
  if (m < 1 || m > n) throw Error("equipartition: m out of range");
  std::vector<std::vector<int>> blocks(m);
  int q = n / m, r = n % m;
  int v = 0;
  for (int i = 0; i < m; ++i) {
    int size = q + (i < r ? 1 : 0);  // descending sizes
    for (int t = 0; t < size; ++t) blocks[i].push_back(v++);
  }
  return Partition(n, std::move(blocks));
}

std::vector<int> Partition::sizes() const {
  std::vector<int> s;
  for (const auto& b : blocks_) s.push_back(b.count());
  return s;
}

std::vector<std::vector<int>> Partition::blocks_as_vectors() const {
  std::vector<std::vector<int>> out;
  for (const auto& b : blocks_) out.push_back(b.to_vector());
  return out;
}

}  // namespace rigidity
