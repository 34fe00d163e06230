#pragma once

#include <utility>
#include <vector>

#include "rigidity/bitset.hpp"

namespace rigidity {

// Immutable simple graph on dense vertex ids 0..n-1 with adjacency bit-rows.
// Surgery operations return new graphs.
class Graph {
 public:
  Graph() = default;
  // Throws on self-loops, parallel edges, or out-of-range endpoints.
  Graph(int n, std::vector<std::pair<int, int>> edges);

  static Graph empty(int n) { return Graph(n, {}); }
  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);
  static Graph complete_bipartite(int a, int b);
  // Two cliques of the given size sharing `shared` vertices
  // (vertices 0..shared-1 are the shared ones).
  static Graph two_cliques(int clique_size, int shared);

  int vertex_count() const { return n_; }
  int edge_count() const { return int(edges_.size()); }
  // Canonical order: each pair (u,v) with u < v, list sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  const Bitset& neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const { return adj_[u].test(v); }
  int degree(int v) const { return adj_[v].count(); }
  int min_degree() const;

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && edges_ == o.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<Bitset> adj_;
};

}  // namespace rigidity
