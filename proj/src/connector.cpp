#include "rigidity/connector.hpp"

#include <algorithm>

#include "nlohmann/json.hpp"
#include "rigidity/engine.hpp"
#include "rigidity/errors.hpp"
#include "rigidity/graph_ops.hpp"
#include "rigidity/rng.hpp"

namespace rigidity {

namespace {

using json = nlohmann::json;

// C(n, k), saturating just above the cap.
long long binomial_capped(int n, int k, long long cap) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return r;
}

}  // namespace

TriBool k_connector_edge(const Graph& g, const Bitset& vi, const Bitset& vj,
                         int k, long long subset_cap) {
  if (k < 1) throw Error("k_connector_edge: k must be positive");
  const Bitset* small = &vi;
  const Bitset* large = &vj;
  if (small->count() > large->count()) std::swap(small, large);
  int sc = small->count();
  if (sc < k || large->count() < k)
    throw HypothesisError("k_connector_edge: block smaller than k");
  if (binomial_capped(sc, k, subset_cap) > subset_cap) return TriBool::kUndecided;

  std::vector<int> verts = small->to_vector();
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  int n = g.vertex_count();
  while (true) {
    Bitset nbhd(n);
    for (int i = 0; i < k; ++i) nbhd |= g.neighbors(verts[idx[i]]);
    if (Bitset::difference_count(*large, nbhd) >= k) return TriBool::kFalse;
    // next k-combination
    int i = k - 1;
    while (i >= 0 && idx[i] == sc - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int t = i + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
  return TriBool::kTrue;
}

Graph build_G0(const Graph& g, const Partition& pi, int k,
               long long subset_cap) {
  int m = pi.block_count();
  for (int i = 0; i < m; ++i)
    if (pi.block(i).count() < k)
      throw HypothesisError("build_G0: block smaller than k");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      TriBool t = k_connector_edge(g, pi.block(i), pi.block(j), k, subset_cap);
      if (t == TriBool::kUndecided)
        throw CapExceededError("build_G0: subset enumeration cap exceeded");
      if (t == TriBool::kTrue) edges.emplace_back(i, j);
    }
  return Graph(m, std::move(edges));
}

Bitset big_component(const Graph& g, const Bitset& vi, const Bitset& vj,
                     const Bitset& u, int k) {
  Bitset a = difference(vi, u);
  Bitset b = difference(vj, u);
  InducedSubgraph sub = induced_bipartite(g, a, b);
  int sn = sub.graph.vertex_count();
  // component labels by BFS over the bipartite subgraph
  std::vector<int> comp(sn, -1);
  int nc = 0;
  std::vector<int> stack;
  for (int s = 0; s < sn; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = nc;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      const Bitset& nb = sub.graph.neighbors(v);
      for (int w = nb.find_first(); w >= 0; w = nb.find_next(w))
        if (comp[w] < 0) {
          comp[w] = nc;
          stack.push_back(w);
        }
    }
    ++nc;
  }
  std::vector<int> side_a(nc, 0), side_b(nc, 0);
  for (int v = 0; v < sn; ++v) {
    if (a.test(sub.vertices[v]))
      ++side_a[comp[v]];
    else
      ++side_b[comp[v]];
  }
  int big = -1;
  for (int c = 0; c < nc; ++c)
    if (side_a[c] >= k && side_b[c] >= k) {
      if (big >= 0) throw BigComponentError("multiple-big-components");
      big = c;
    }
  if (big < 0) throw BigComponentError("no-big-component");
  Bitset out(g.vertex_count());
  for (int v = 0; v < sn; ++v)
    if (comp[v] == big) out.set(sub.vertices[v]);
  return out;
}

namespace {

struct BigComponentTable {
  const Graph& g;
  const Partition& pi;
  const Graph& g0;
  int k;
  std::vector<Bitset> comps;  // indexed by G0 edge position

  BigComponentTable(const Graph& g_, const Partition& pi_, const Graph& g0_,
                    int k_, const Bitset& u)
      : g(g_), pi(pi_), g0(g0_), k(k_) {
    comps.resize(g0.edge_count());
    for (int e = 0; e < g0.edge_count(); ++e) recompute(e, u);
  }

  void recompute(int e, const Bitset& u) {
    auto [i, j] = g0.edges()[e];
    comps[e] = big_component(g, pi.block(i), pi.block(j), u, k);
  }

  // # big components toward G0-neighbors of v's block containing v
  int membership(int v) const {
    int c = 0;
    for (int e = 0; e < g0.edge_count(); ++e)
      if (comps[e].test(v)) ++c;
    return c;
  }
};

}  // namespace

Bitset eliminate_bad(const Graph& g, const Partition& pi, const Graph& g0,
                     const ConnectorConfig& cfg, ConnectorTrace* trace) {
  int n = g.vertex_count();
  int m = pi.block_count();
  int s = cfg.removal_cap();
  if (s < cfg.k) throw Error("eliminate_bad: removal cap below k");
  Bitset u(n);
  std::vector<int> removed_per_block(m, 0);
  BigComponentTable table(g, pi, g0, cfg.k, u);
  while (true) {
    int bad = -1, bad_count = 0, bad_deg = 0;
    // lowest bad vertex by (block, id)
    for (int i = 0; i < m && bad < 0; ++i) {
      int deg = g0.degree(i);
      const Bitset& block = pi.block(i);
      for (int v = block.find_first(); v >= 0; v = block.find_next(v)) {
        if (u.test(v)) continue;
        int c = table.membership(v);
        // c < T_i = deg * (1 - k/s), exactly
        if ((long long)c * s < (long long)deg * (s - cfg.k)) {
          bad = v;
          bad_count = c;
          bad_deg = deg;
          break;
        }
      }
    }
    if (bad < 0) break;
    int blk = pi.block_of(bad);
    if (removed_per_block[blk] >= s)
      throw HypothesisError("cap-overflow: block " + std::to_string(blk));
    u.set(bad);
    ++removed_per_block[blk];
    for (int e = 0; e < g0.edge_count(); ++e) {
      auto [a, b] = g0.edges()[e];
      if (a == blk || b == blk) table.recompute(e, u);
    }
    if (trace)
      trace->removals.push_back({bad, blk, bad_count, bad_deg});
  }
  if (trace) trace->u0 = u.to_vector();
  return u;
}

std::string ConnectorTrace::to_json() const {
  json j;
  json g0_edges = json::array();
  for (auto [a, b] : g0.edges()) g0_edges.push_back({a, b});
  j["G0"] = {{"m", g0.vertex_count()}, {"edges", g0_edges}};
  j["d"] = d;
  j["removals"] = json::array();
  for (const auto& r : removals)
    j["removals"].push_back({{"vertex", r.vertex},
                             {"block", r.block},
                             {"containing_components", r.containing_components},
                             {"G0_degree", r.g0_degree}});
  j["U0"] = u0;
  j["W"] = w;
  if (!strong_verdict_json.empty())
    j["strong"] = json::parse(strong_verdict_json);
  if (!direct_verdict_json.empty())
    j["direct"] = json::parse(direct_verdict_json);
  return j.dump();
}

ConnectorOutcome connector_certify(const Graph& g, const Partition& pi,
                                   const ConnectorConfig& cfg,
                                   ConnectorTrace* trace) {
  if (!(Rational(1, 2) < cfg.eta && cfg.eta <= Rational(1)))
    throw Error("connector: eta must be in (1/2, 1]");
  int n = g.vertex_count();
  int m = pi.block_count();
  int k = cfg.k;
  for (int i = 0; i < m; ++i)
    if (pi.block(i).count() <= 7 * k - 3)
      throw HypothesisError("connector: block size must exceed 7k-3");

  ConnectorOutcome out;
  // d = floor((eta - 1/2) m)
  long long num = 2 * cfg.eta.num - cfg.eta.den;
  out.d = int(num * m / (2 * cfg.eta.den));
  out.w = Bitset(n);
  if (trace) trace->d = out.d;

  Graph g0 = build_G0(g, pi, k, cfg.subset_cap);
  if (trace) trace->g0 = g0;

  // delta(G0) >= eta*m - 1
  if (Rational(g0.min_degree() + 1) < Rational(cfg.eta.num * m, cfg.eta.den)) {
    out.verdict.failing = Obligation::kHypothesisViolated;
    out.verdict.detail = "delta(G0) = " + std::to_string(g0.min_degree()) +
                         " < eta*m - 1";
    if (trace) trace->strong_verdict_json = out.verdict.to_json();
    return out;
  }
  if (out.d < 1) {
    out.verdict.failing = Obligation::kHypothesisViolated;
    out.verdict.detail = "(eta - 1/2) m < 1";
    if (trace) trace->strong_verdict_json = out.verdict.to_json();
    return out;
  }

  Bitset u0 = eliminate_bad(g, pi, g0, cfg, trace);
  Bitset w = Bitset::full(n);
  w.subtract(u0);
  out.w = w;
  if (trace) trace->w = w.to_vector();

  InducedSubgraph sub = induced_subgraph(g, w);
  std::vector<int> local(n, -1);
  for (size_t a = 0; a < sub.vertices.size(); ++a)
    local[sub.vertices[a]] = int(a);
  std::vector<std::vector<int>> blocks(m);
  for (int i = 0; i < m; ++i)
    for (int v = pi.block(i).find_first(); v >= 0;
         v = pi.block(i).find_next(v))
      if (local[v] >= 0) blocks[i].push_back(local[v]);
  Partition residual(sub.graph.vertex_count(), std::move(blocks));

  uint64_t cseed = CounterRng::pair_hash({cfg.seed, 0x636f6eULL}, 0, 0);
  out.verdict = certify_strong_partition(sub.graph, residual, out.d,
                                         /*allow_self=*/true, cseed);
  out.direct = is_d_rigid(sub.graph, out.d,
                          CounterRng::pair_hash({cfg.seed, 0x636f6eULL}, 1, 0),
                          cfg.trials);
  if (trace) {
    trace->strong_verdict_json = out.verdict.to_json();
    trace->direct_verdict_json = out.direct.to_json();
  }
  return out;
}

}  // namespace rigidity
