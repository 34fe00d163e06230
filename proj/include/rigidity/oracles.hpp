#pragma once

#include <utility>
#include <vector>

#include "rigidity/graph.hpp"

namespace rigidity::oracles {

bool connected(const Graph& g);

// Size of a maximal set of independent edges in the (2,3) pebble game,
// i.e. the generic 2-dimensional rank of G.
int pebble_rank2(const Graph& g);

// True iff G contains a spanning Laman subgraph (2n-3 independent edges).
// Requires n >= 2.
bool laman_rigid(const Graph& g);

// Rank by exact rational arithmetic; ground truth for the mod-q engine at
// tiny sizes. Throws CapExceededError when rows*cols > 400.
int exact_rank_rational(const std::vector<std::vector<long long>>& m);

// Loop-free multigraph; parallel edges allowed.
struct Multigraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

// Maximum number of edge-disjoint spanning trees, by minimizing
// floor(cross(P) / (|P|-1)) over all vertex partitions (Tutte /
// Nash-Williams). Requires 2 <= n <= 12.
int tree_packing_count(const Multigraph& g);

}  // namespace rigidity::oracles
