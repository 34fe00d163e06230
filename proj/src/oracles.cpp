#include "rigidity/oracles.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <queue>

#include "rigidity/errors.hpp"

namespace rigidity::oracles {

bool connected(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 1) return true;
  Bitset seen(n);
  std::queue<int> q;
  seen.set(0);
  q.push(0);
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    const Bitset& nb = g.neighbors(v);
    for (int w = nb.find_first(); w >= 0; w = nb.find_next(w)) {
      if (seen.test(w)) continue;
      seen.set(w);
      ++reached;
      q.push(w);
    }
  }
  return reached == n;
}

namespace {

// (2,3) pebble game state: pebbles[v] in 0..2, directed edges out[v].
struct Pebble2 {
  std::vector<int> pebbles;
  std::vector<std::vector<int>> out;

  explicit Pebble2(int n) : pebbles(n, 2), out(n) {}

  // DFS from v along directed edges for a free pebble; on success the path
  // is reversed and v gains one. Never takes pebbles from visited vertices.
  bool collect(int v, std::vector<bool>& visited) {
    for (size_t i = 0; i < out[v].size(); ++i) {
      int w = out[v][i];
      if (visited[w]) continue;
      visited[w] = true;
      if (pebbles[w] == 0 && !collect(w, visited)) continue;
      --pebbles[w];
      ++pebbles[v];
      out[v].erase(out[v].begin() + long(i));
      out[w].push_back(v);
      return true;
    }
    return false;
  }

  // Accept the edge iff four pebbles can be gathered on its endpoints.
  bool try_insert(int u, int v) {
    int n = int(pebbles.size());
    while (pebbles[u] + pebbles[v] < 4) {
      std::vector<bool> visited(n, false);
      visited[u] = true;
      visited[v] = true;
      if (pebbles[u] < 2 && collect(u, visited)) continue;
      std::fill(visited.begin(), visited.end(), false);
      visited[u] = true;
      visited[v] = true;
      if (pebbles[v] < 2 && collect(v, visited)) continue;
      return false;
    }
    --pebbles[u];
    out[u].push_back(v);
    return true;
  }
};

}  // namespace

int pebble_rank2(const Graph& g) {
  Pebble2 game(g.vertex_count());
  int rank = 0;
  for (auto [u, v] : g.edges())
    if (game.try_insert(u, v)) ++rank;
  return rank;
}

bool laman_rigid(const Graph& g) {
  int n = g.vertex_count();
  if (n < 2) throw Error("laman_rigid: need at least two vertices");
  if (n == 2) return g.edge_count() == 1;
  return pebble_rank2(g) == 2 * n - 3;
}

int exact_rank_rational(const std::vector<std::vector<long long>>& m) {
  using Rat = boost::multiprecision::cpp_rational;
  size_t rows = m.size();
  if (rows == 0) return 0;
  size_t cols = m[0].size();
  if (rows * cols > 400)
    throw CapExceededError("exact_rank_rational: matrix exceeds 400 entries");
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
  for (size_t r = 0; r < rows; ++r) {
    if (m[r].size() != cols) throw Error("exact_rank_rational: ragged matrix");
    for (size_t c = 0; c < cols; ++c) a[r][c] = m[r][c];
  }
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (size_t r = rank + 1; r < rows; ++r) {
      if (a[r][col] == 0) continue;
      Rat f = a[r][col] / a[rank][col];
      for (size_t c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  return int(rank);
}

namespace {

// Enumerate set partitions via restricted growth strings; f(blocks) is
// called with block_of for each partition.
template <typename F>
void for_each_partition(int n, F&& f) {
  std::vector<int> rgs(n, 0), maxv(n, 0);
  while (true) {
    int blocks = 0;
    for (int v : rgs) blocks = std::max(blocks, v + 1);
    f(rgs, blocks);
    int i = n - 1;
    while (i > 0 && rgs[i] == maxv[i - 1] + 1) --i;
    if (i == 0) return;
    ++rgs[i];
    maxv[i] = std::max(maxv[i - 1], rgs[i]);
    for (int j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      maxv[j] = maxv[i];
    }
  }
}

}  // namespace

int tree_packing_count(const Multigraph& g) {
  if (g.n < 2 || g.n > 12)
    throw Error("tree_packing_count: requires 2 <= n <= 12");
  for (auto [u, v] : g.edges)
    if (u == v || u < 0 || v < 0 || u >= g.n || v >= g.n)
      throw Error("tree_packing_count: bad edge");
  int best = int(g.edges.size());  // trivial upper bound
  for_each_partition(g.n, [&](const std::vector<int>& block_of, int blocks) {
    if (blocks < 2) return;
    int cross = 0;
    for (auto [u, v] : g.edges)
      if (block_of[u] != block_of[v]) ++cross;
    best = std::min(best, cross / (blocks - 1));
  });
  return best;
}

}  // namespace rigidity::oracles
