#pragma once

#include <cstdint>
#include <vector>

#include "rigidity/graph.hpp"
#include "rigidity/partition.hpp"
#include "rigidity/rational.hpp"

namespace rigidity {

class CounterRng;

// A subgraph relabeled to local ids 0..k-1; vertices[i] is the original id.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertices;  // ascending
};

// G[A,B]: the graph on A∪B whose edges meet both A and B.
// A == B gives the induced subgraph G[A].
InducedSubgraph induced_bipartite(const Graph& g, const Bitset& a,
                                  const Bitset& b);
InducedSubgraph induced_subgraph(const Graph& g, const Bitset& w);

// Quotient graph on the blocks: {i,j} is an edge iff some G-edge crosses.
Graph reduced_graph(const Graph& g, const Partition& pi);

// G plus one new vertex (id n) adjacent exactly to S. Throws on empty S.
Graph zero_extension(const Graph& g, const Bitset& s);

enum class SplitMode {
  kSharedAtLeastDMinus1WithEdge,  // result contains the edge {x,y}
  kSharedAtLeastDWithoutEdge,
};

struct SplitResult {
  Graph graph;  // n+1 vertices
  int x;        // keeps v's id
  int y;        // the new id n
};

// Replace v by x,y with neighborhoods nx, ny (nx ∪ ny must equal N(v)).
SplitResult vertex_split(const Graph& g, int v, const Bitset& nx,
                         const Bitset& ny, SplitMode mode);

int codegree(const Graph& g, int u, int v);
int min_codegree(const Graph& g);  // n >= 2

// Exact min over k <= |U| <= n/2 of |boundary(U)|/|U| by full enumeration.
// Throws CapExceededError when n exceeds the cap.
Rational isoperimetric(const Graph& g, int k, int cap = 24);

// Randomized upper bound on i(G;k): min ratio over sampled sets.
Rational isoperimetric_upper_estimate(const Graph& g, int k, int samples,
                                      CounterRng& rng);

}  // namespace rigidity
