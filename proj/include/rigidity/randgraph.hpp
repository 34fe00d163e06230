#pragma once

#include <cstdint>
#include <vector>

#include "rigidity/graph.hpp"
#include "rigidity/partition.hpp"
#include "rigidity/rng.hpp"

namespace rigidity {

// Each pair included independently with probability p; the indicator of a
// pair depends only on (spec, u, v), so subgraph sampling reproduces.
Graph gnp(int n, double p, RngSpec spec);

// Random simple r-regular graph by Steger-Wormald stub pairing
// (asymptotically uniform); an attempt restarts from scratch only when no
// suitable stub pair remains. Throws after max_restarts attempts.
Graph random_regular(int n, int r, RngSpec spec, int max_restarts = 10'000);

// Uniformly random assignment with block sizes differing by at most one,
// ordered descending.
Partition random_equipartition(int n, int m, RngSpec spec);

// min over pairs u<v of |M_pi(u,v)| where M_pi(u,v) is the set of blocks
// containing a common neighbor of u and v.
int delta2_of_partition(const Graph& g, const Partition& pi);

struct CodegreeStats {
  std::vector<int> samples;  // delta2(pi) per trial
  int min = 0;
  double mean = 0.0;
  // fraction of samples >= t
  double fraction_at_least(int t) const;
};

CodegreeStats codegree_partition_stats(const Graph& g, int m, int trials,
                                       RngSpec spec);

}  // namespace rigidity
