#include "rigidity/randgraph.hpp"

#include <algorithm>

#include "rigidity/errors.hpp"

namespace rigidity {

Graph gnp(int n, double p, RngSpec spec) {
  if (n < 0) throw Error("gnp: negative n");
  if (!(p >= 0.0 && p <= 1.0)) throw Error("gnp: p out of range");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      uint64_t x = CounterRng::pair_hash(spec, uint64_t(u), uint64_t(v));
      if (double(x >> 11) * 0x1.0p-53 < p) edges.emplace_back(u, v);
    }
  return Graph(n, std::move(edges));
}

Graph random_regular(int n, int r, RngSpec spec, int max_restarts) {
  if (r < 0 || r >= n) throw Error("random_regular: need 0 <= r < n");
  if ((long long)n * r % 2 != 0) throw Error("random_regular: n*r must be even");
  // Steger-Wormald pairing: match uniformly random suitable stub pairs,
  // restarting the whole attempt only when no suitable pair remains.
  // (Whole-sample rejection is hopeless beyond small r: the probability
  // that a uniform pairing is simple decays like exp(-(r^2-1)/4).)
  for (int attempt = 0; attempt < max_restarts; ++attempt) {
    CounterRng rng(CounterRng::pair_hash(spec, 0x726567ULL, uint64_t(attempt)),
                   0);
    std::vector<int> stubs(size_t(n) * r);
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < r; ++i) stubs[size_t(v) * r + i] = v;
    std::vector<Bitset> adj(n, Bitset(n));
    std::vector<std::pair<int, int>> edges;
    edges.reserve(stubs.size() / 2);
    int fails = 0;
    bool stuck = false;
    while (!stubs.empty() && !stuck) {
      size_t i = size_t(rng.below(stubs.size()));
      size_t j = size_t(rng.below(stubs.size() - 1));
      if (j >= i) ++j;
      int u = stubs[i], v = stubs[j];
      if (u != v && !adj[u].test(v)) {
        adj[u].set(v);
        adj[v].set(u);
        edges.emplace_back(std::min(u, v), std::max(u, v));
        if (i < j) std::swap(i, j);
        stubs[i] = stubs.back();
        stubs.pop_back();
        stubs[j] = stubs.back();
        stubs.pop_back();
        fails = 0;
      } else if (++fails > 1000) {
        // verify a suitable pair actually exists before giving up
        stuck = true;
        for (size_t a = 0; a < stubs.size() && stuck; ++a)
          for (size_t b = a + 1; b < stubs.size(); ++b)
            if (stubs[a] != stubs[b] && !adj[stubs[a]].test(stubs[b])) {
              stuck = false;
              break;
            }
        fails = 0;
      }
    }
    if (stubs.empty()) return Graph(n, std::move(edges));
  }
  throw Error("random_regular: retry budget exhausted");
}

Partition random_equipartition(int n, int m, RngSpec spec) {
  if (m < 1 || m > n) throw Error("random_equipartition: m out of range");
  CounterRng rng(spec);
  std::vector<int> verts(n);
  for (int v = 0; v < n; ++v) verts[v] = v;
  rng.shuffle(verts);
  int q = n / m, rem = n % m;
  std::vector<std::vector<int>> blocks(m);
  int at = 0;
  for (int i = 0; i < m; ++i) {
    int size = q + (i < rem ? 1 : 0);  // descending sizes
    blocks[i].assign(verts.begin() + at, verts.begin() + at + size);
    at += size;
  }
  return Partition(n, std::move(blocks));
}

int delta2_of_partition(const Graph& g, const Partition& pi) {
  int n = g.vertex_count();
  if (pi.n() != n) throw Error("delta2_of_partition: partition size mismatch");
  if (n < 2) throw Error("delta2_of_partition: need at least two vertices");
  int m = pi.block_count();
  int best = m;
  for (int u = 0; u < n && best > 0; ++u)
    for (int v = u + 1; v < n; ++v) {
      Bitset common = g.neighbors(u) & g.neighbors(v);
      int cnt = 0;
      for (int i = 0; i < m; ++i)
        if (common.intersects(pi.block(i))) ++cnt;
      best = std::min(best, cnt);
      if (best == 0) break;
    }
  return best;
}

double CodegreeStats::fraction_at_least(int t) const {
  if (samples.empty()) return 0.0;
  int c = 0;
  for (int s : samples)
    if (s >= t) ++c;
  return double(c) / double(samples.size());
}

CodegreeStats codegree_partition_stats(const Graph& g, int m, int trials,
                                       RngSpec spec) {
  if (m < 1) throw Error("codegree_partition_stats: m must be positive");
  if (trials < 1) throw Error("codegree_partition_stats: need trials");
  CodegreeStats st;
  long long sum = 0;
  for (int t = 0; t < trials; ++t) {
    Partition pi = random_equipartition(
        g.vertex_count(), m, {spec.master_seed, spec.stream_id + uint64_t(t)});
    int d2 = delta2_of_partition(g, pi);
    st.samples.push_back(d2);
    sum += d2;
  }
  st.min = *std::min_element(st.samples.begin(), st.samples.end());
  st.mean = double(sum) / double(trials);
  return st;
}

}  // namespace rigidity
