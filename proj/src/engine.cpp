#include "rigidity/engine.hpp"

#include <cmath>

#include "nlohmann/json.hpp"
#include "rigidity/errors.hpp"
#include "rigidity/rng.hpp"

namespace rigidity {

std::string RigidityVerdict::to_json() const {
  nlohmann::json j;
  j["d"] = d;
  j["rank"] = rank;
  j["target"] = target;
  j["rigid"] = rigid;
  j["trials"] = trials;
  j["seed"] = seed;
  j["error_bound"] = error_bound;
  if (!note.empty()) j["note"] = note;
  return j.dump();
}

int rank_target(int n, int d) {
  if (d < 1) throw Error("rank_target: dimension must be positive");
  if (n <= d) return n * (n - 1) / 2;
  return d * n - d * (d + 1) / 2;
}

namespace {

// Stream ids for the per-trial derived seeds; keeps trial t of seed s
// independent of trial t' and of the point stream inside generic_points.
constexpr uint64_t kTrialStream = 0x7472696c73ULL;

int trial_rank(const Graph& g, int d, uint64_t trial_seed, int stop_at) {
  int n = g.vertex_count();
  int m = g.edge_count();
  int cols = d * n;
  auto pts = generic_points(n, d, trial_seed);

  if (m <= cols + 64) {
    ff::Matrix a = rigidity_matrix({g, d, pts});
    return ff::rank_destructive(a, stop_at);
  }

  // Tall matrix: compress rows with a random projection B = R * A. Since
  // rank(RA) <= rank(A) always, a "rigid" verdict stays one-sided; rank loss
  // is just another Schwartz-Zippel failure mode covered by the same bound.
  int t = std::min(m, cols + 32);
  ff::Matrix b(t, cols);
  std::vector<uint64_t> diff(size_t(m) * d);
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edges()[e];
    for (int x = 0; x < d; ++x)
      diff[size_t(e) * d + x] = ff::sub(pts[u][x], pts[v][x]);
  }
  RngSpec proj{trial_seed, 0x70726f6aULL};
  for (int i = 0; i < t; ++i) {
    uint64_t* row = b.row(i);
    for (int e = 0; e < m; ++e) {
      uint64_t c = CounterRng::pair_hash(proj, uint64_t(i), uint64_t(e));
      c = ff::reduce(c);
      if (c == 0) continue;
      auto [u, v] = g.edges()[e];
      const uint64_t* de = &diff[size_t(e) * d];
      for (int x = 0; x < d; ++x) {
        uint64_t w = ff::mul(c, de[x]);
        row[u * d + x] = ff::add(row[u * d + x], w);
        row[v * d + x] = ff::sub(row[v * d + x], w);
      }
    }
  }
  return ff::rank_destructive(b, stop_at);
}

}  // namespace

int generic_rank(const Graph& g, int d, uint64_t seed, int trials,
                 int stop_at) {
  if (d < 1) throw Error("generic_rank: dimension must be positive");
  if (trials < 1) throw Error("generic_rank: need at least one trial");
  if (g.edge_count() == 0) return 0;
  int best = 0;
  for (int t = 0; t < trials; ++t) {
    uint64_t ts = CounterRng::pair_hash({seed, kTrialStream}, uint64_t(t), 0);
    best = std::max(best, trial_rank(g, d, ts, stop_at));
    if (stop_at > 0 && best >= stop_at) break;
  }
  return best;
}

RigidityVerdict is_d_rigid(const Graph& g, int d, uint64_t seed, int trials) {
  int n = g.vertex_count();
  RigidityVerdict v;
  v.d = d;
  v.seed = seed;
  v.trials = trials;
  v.target = rank_target(n, d);
  if (n <= d) {
    // Complete graphs are the only rigid graphs here; no rank needed.
    v.rank = g.edge_count();
    v.rigid = (g.edge_count() == n * (n - 1) / 2);
    v.note = "convention: small-n";
    v.error_bound = 0.0;
    return v;
  }
  v.rank = generic_rank(g, d, seed, trials, v.target);
  v.rigid = (v.rank == v.target);
  v.error_bound =
      v.rigid ? 0.0
              : std::pow(double(g.edge_count()) / double(ff::kPrime), trials);
  return v;
}

RigidityVerdict is_limit_inf_rigid(const LimitFrameworkSpec& l) {
  RigidityVerdict v;
  v.d = l.d;
  v.trials = 1;
  v.target = rank_target(l.graph.vertex_count(), l.d);
  ff::Matrix m = limit_rigidity_matrix(l);
  v.rank = ff::rank_destructive(m);
  v.rigid = (v.rank == v.target);
  v.error_bound = 0.0;  // exact: the matrix entries are the given directions
  v.note = "limit framework";
  return v;
}

Bitset absorb(const Graph& g, const Bitset& b, int d) {
  int n = g.vertex_count();
  if (b.capacity() != n) throw Error("absorb: capacity mismatch");
  Bitset w = b;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int v = 0; v < n; ++v) {
      if (w.test(v)) continue;
      if (Bitset::intersect_count(g.neighbors(v), w) >= d) {
        w.set(v);
        grew = true;
      }
    }
  }
  return w;
}

bool jlv_sufficient(const Graph& g, int d) {
  int n = g.vertex_count();
  if (d < 1 || n <= d) throw Error("jlv_sufficient: requires 1 <= d < n");
  return 2 * g.min_degree() >= n + 2 * d - 2;
}

}  // namespace rigidity
