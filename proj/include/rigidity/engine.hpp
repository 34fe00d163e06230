#pragma once

#include <cstdint>
#include <string>

#include "rigidity/bitset.hpp"
#include "rigidity/framework.hpp"
#include "rigidity/graph.hpp"

namespace rigidity {

// rigid <=> rank == target. A "rigid" verdict is exact; a "flexible" one
// fails with probability at most error_bound.
struct RigidityVerdict {
  int d = 0;
  int rank = 0;
  int target = 0;
  bool rigid = false;
  int trials = 0;
  uint64_t seed = 0;
  double error_bound = 0.0;
  std::string note;  // "convention: small-n" when n <= d

  std::string to_json() const;
};

// d*n - C(d+1,2) for n >= d+1; for smaller n, the dimension of the
// configuration space modulo isometries, C(n,2).
int rank_target(int n, int d);

// Max over trials of rank(rigidity_matrix) at independent random positions.
// Always <= the generic rank; equal to it except with probability
// <= (|E|/q)^trials. stop_at > 0 short-circuits once that rank is reached.
int generic_rank(const Graph& g, int d, uint64_t seed, int trials = 2,
                 int stop_at = -1);

RigidityVerdict is_d_rigid(const Graph& g, int d, uint64_t seed = 0,
                           int trials = 2);

// Rank verdict for a limit framework. The caller is responsible for the
// affine-span hypothesis when reading the verdict as d-rigidity of G.
RigidityVerdict is_limit_inf_rigid(const LimitFrameworkSpec& l);

// Closure of B under "add any vertex with >= d neighbors inside", visiting
// candidates in ascending id order to a fixed point. Preserves d-rigidity
// of the induced subgraph (0-extension).
Bitset absorb(const Graph& g, const Bitset& b, int d);

// delta(G) >= n/2 + d - 1: sufficient for d-rigidity. false means
// inconclusive, not flexible.
bool jlv_sufficient(const Graph& g, int d);

}  // namespace rigidity
