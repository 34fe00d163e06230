#pragma once

#include <cstdint>
#include <vector>

#include "rigidity/ff.hpp"
#include "rigidity/graph.hpp"

namespace rigidity {

// Multigraph with a nonnegative color per edge; no self-loops.
struct ColoredMultigraph {
  struct Edge {
    int u, v, color;
  };
  int n = 0;
  std::vector<Edge> edges;

  void validate() const;  // throws on self-loops, bad ids, negative colors
  int max_color() const;
};

// Constraint matrix of the anchoring system: row of edge e carries
// +x_{c(e)} in u's column block and -x_{c(e)} in v's, at the given points.
ff::Matrix anchoring_matrix(const ColoredMultigraph& h, int d,
                            const std::vector<std::vector<uint64_t>>& points);

// True iff the only motions are constant maps, i.e. the constraint matrix
// has rank d*(n-1) at random generic color vectors. One-sided randomized:
// "anchored" is certain, "not anchored" errs with probability <= deg/q
// per trial.
bool is_d_anchored(const ColoredMultigraph& h, int d, uint64_t seed,
                   int trials = 2);

}  // namespace rigidity
