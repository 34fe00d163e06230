#include "rigidity/graph.hpp"

#include <algorithm>
#include <set>

#include "rigidity/errors.hpp"

namespace rigidity {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw Error("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw Error("edge endpoint out of range");
    if (u == v) throw Error("self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw Error("parallel edge");
  edges_ = std::move(edges);
  adj_.assign(n, Bitset(n));
  for (auto [u, v] : edges_) {
    adj_[u].set(v);
    adj_[v].set(u);
  }
}

Graph Graph::complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

Graph Graph::cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  if (n >= 3) e.emplace_back(0, n - 1);
  return Graph(n, std::move(e));
}

Graph Graph::path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return Graph(n, std::move(e));
}

Graph Graph::complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) e.emplace_back(u, v);
  return Graph(a + b, std::move(e));
}

Graph Graph::two_cliques(int clique_size, int shared) {
  if (shared > clique_size) throw Error("shared exceeds clique size");
  int n = 2 * clique_size - shared;
  std::set<std::pair<int, int>> e;
  // first clique: 0..clique_size-1; second: 0..shared-1 and clique_size..n-1
  for (int u = 0; u < clique_size; ++u)
    for (int v = u + 1; v < clique_size; ++v) e.emplace(u, v);
  std::vector<int> second;
  for (int u = 0; u < shared; ++u) second.push_back(u);
  for (int u = clique_size; u < n; ++u) second.push_back(u);
  for (size_t i = 0; i < second.size(); ++i)
    for (size_t j = i + 1; j < second.size(); ++j)
      e.emplace(std::min(second[i], second[j]), std::max(second[i], second[j]));
  return Graph(n, std::vector<std::pair<int, int>>(e.begin(), e.end()));
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

}  // namespace rigidity
