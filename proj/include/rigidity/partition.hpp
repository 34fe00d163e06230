#pragma once

#include <vector>

#include "rigidity/bitset.hpp"
#include "rigidity/graph.hpp"

namespace rigidity {

// Ordered list of disjoint nonempty vertex blocks covering 0..n-1.
class Partition {
 public:
  Partition() = default;
  // Throws unless the blocks are nonempty, disjoint, and cover 0..n-1.
  Partition(int n, std::vector<std::vector<int>> blocks);

  static Partition singletons(int n);
  // Blocks of sizes differing by at most one, descending, contiguous ranges.
  static Partition contiguous_equipartition(int n, int m);

  int n() const { return n_; }
  int block_count() const { return int(blocks_.size()); }
  const Bitset& block(int i) const { return blocks_[i]; }
  int block_of(int v) const { return block_of_[v]; }
  std::vector<int> sizes() const;
  std::vector<std::vector<int>> blocks_as_vectors() const;

 private:
  int n_ = 0;
  std::vector<Bitset> blocks_;
  std::vector<int> block_of_;
};

}  // namespace rigidity
