#include "rigidity/graph_ops.hpp"

#include <algorithm>

#include "rigidity/errors.hpp"
#include "rigidity/rng.hpp"

namespace rigidity {

InducedSubgraph induced_bipartite(const Graph& g, const Bitset& a,
                                  const Bitset& b) {
  int n = g.vertex_count();
  if (a.capacity() != n || b.capacity() != n)
    throw Error("induced_bipartite: vertex set capacity mismatch");
  Bitset support = a | b;
  std::vector<int> verts = support.to_vector();
  std::vector<int> local(n, -1);
  for (size_t i = 0; i < verts.size(); ++i) local[verts[i]] = int(i);
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    if (!support.test(u) || !support.test(v)) continue;
    bool meets_a = a.test(u) || a.test(v);
    bool meets_b = b.test(u) || b.test(v);
    if (meets_a && meets_b) edges.emplace_back(local[u], local[v]);
  }
  return {Graph(int(verts.size()), std::move(edges)), std::move(verts)};
}

InducedSubgraph induced_subgraph(const Graph& g, const Bitset& w) {
  return induced_bipartite(g, w, w);
}

Graph reduced_graph(const Graph& g, const Partition& pi) {
  if (pi.n() != g.vertex_count()) throw Error("reduced_graph: partition size mismatch");
  int m = pi.block_count();
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<bool>> seen(m, std::vector<bool>(m, false));
  for (auto [u, v] : g.edges()) {
    int i = pi.block_of(u), j = pi.block_of(v);
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    if (!seen[i][j]) {
      seen[i][j] = true;
      edges.emplace_back(i, j);
    }
  }
  return Graph(m, std::move(edges));
}

Graph zero_extension(const Graph& g, const Bitset& s) {
  if (s.none()) throw Error("zero_extension: empty attachment set");
  int n = g.vertex_count();
  auto edges = g.edges();
  for (int v = s.find_first(); v >= 0; v = s.find_next(v)) {
    if (v >= n) throw Error("zero_extension: vertex out of range");
    edges.emplace_back(v, n);
  }
  return Graph(n + 1, std::move(edges));
}

SplitResult vertex_split(const Graph& g, int v, const Bitset& nx,
                         const Bitset& ny, SplitMode mode) {
  int n = g.vertex_count();
  if (v < 0 || v >= n) throw Error("vertex_split: vertex not in graph");
  if (!((nx | ny) == g.neighbors(v)))
    throw Error("vertex_split: Nx and Ny must cover N(v) exactly");
  int x = v, y = n;
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : g.edges())
    if (a != v && b != v) edges.emplace_back(a, b);
  for (int w = nx.find_first(); w >= 0; w = nx.find_next(w))
    edges.emplace_back(std::min(x, w), std::max(x, w));
  for (int w = ny.find_first(); w >= 0; w = ny.find_next(w))
    edges.emplace_back(w, y);
  if (mode == SplitMode::kSharedAtLeastDMinus1WithEdge) edges.emplace_back(x, y);
  return {Graph(n + 1, std::move(edges)), x, y};
}

int codegree(const Graph& g, int u, int v) {
  return Bitset::intersect_count(g.neighbors(u), g.neighbors(v));
}

int min_codegree(const Graph& g) {
  int n = g.vertex_count();
  if (n < 2) throw Error("min_codegree: need at least two vertices");
  int best = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) best = std::min(best, codegree(g, u, v));
  return best;
}

namespace {

long long boundary_size(const Graph& g, const Bitset& u) {
  long long total = 0;
  for (int v = u.find_first(); v >= 0; v = u.find_next(v))
    total += Bitset::difference_count(g.neighbors(v), u);
  return total;
}

}  // namespace

Rational isoperimetric(const Graph& g, int k, int cap) {
  int n = g.vertex_count();
  if (n > cap)
    throw CapExceededError("isoperimetric: n exceeds enumeration cap; use sampling estimator");
  if (k < 1 || 2 * k > n) throw Error("isoperimetric: k out of range");
  // 32-bit adjacency masks; n <= cap <= 31 here
  std::vector<uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  bool found = false;
  Rational best;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    int size = std::popcount(mask);
    if (size < k || 2 * size > n) continue;
    long long boundary = 0;
    for (uint32_t rest = mask; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      boundary += std::popcount(adj[v] & ~mask);
    }
    Rational r(boundary, size);
    if (!found || r < best) {
      best = r;
      found = true;
    }
  }
  if (!found) throw Error("isoperimetric: no admissible subset");
  return best;
}

Rational isoperimetric_upper_estimate(const Graph& g, int k, int samples,
                                      CounterRng& rng) {
  int n = g.vertex_count();
  if (k < 1 || 2 * k > n) throw Error("isoperimetric: k out of range");
  bool found = false;
  Rational best;
  std::vector<int> verts(n);
  for (int v = 0; v < n; ++v) verts[v] = v;
  for (int t = 0; t < samples; ++t) {
    int size = k + int(rng.below(uint64_t(n / 2 - k + 1)));
    rng.shuffle(verts);
    Bitset u(n);
    for (int i = 0; i < size; ++i) u.set(verts[i]);
    Rational r(boundary_size(g, u), size);
    if (!found || r < best) {
      best = r;
      found = true;
    }
  }
  return best;
}

}  // namespace rigidity
