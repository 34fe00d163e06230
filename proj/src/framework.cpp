#include "rigidity/framework.hpp"

#include "rigidity/errors.hpp"

namespace rigidity {

namespace {

void check_spec(const Graph& g, int d,
                const std::vector<std::vector<uint64_t>>& positions) {
  if (d < 1) throw Error("framework: dimension must be positive");
  if (int(positions.size()) != g.vertex_count())
    throw Error("framework: one position per vertex required");
  for (const auto& p : positions)
    if (int(p.size()) != d) throw Error("framework: position dimension mismatch");
}

}  // namespace

ff::Matrix rigidity_matrix(const FrameworkSpec& f) {
  check_spec(f.graph, f.d, f.positions);
  int d = f.d;
  ff::Matrix m(f.graph.edge_count(), d * f.graph.vertex_count());
  int r = 0;
  for (auto [u, v] : f.graph.edges()) {
    for (int x = 0; x < d; ++x) {
      uint64_t diff = ff::sub(f.positions[u][x], f.positions[v][x]);
      m.at(r, u * d + x) = diff;
      m.at(r, v * d + x) = ff::neg(diff);
    }
    ++r;
  }
  return m;
}

ff::Matrix limit_rigidity_matrix(const LimitFrameworkSpec& l) {
  check_spec(l.graph, l.d, l.positions);
  if (int(l.directions.size()) != l.graph.edge_count())
    throw Error("limit framework: one direction per edge required");
  int d = l.d;
  ff::Matrix m(l.graph.edge_count(), d * l.graph.vertex_count());
  for (int r = 0; r < l.graph.edge_count(); ++r) {
    const auto& dir = l.directions[r];
    if (int(dir.size()) != d) throw Error("limit framework: direction dimension mismatch");
    bool zero = true;
    for (auto x : dir) zero &= (x == 0);
    if (zero) throw Error("limit framework: zero direction vector");
    auto [u, v] = l.graph.edges()[r];
    for (int x = 0; x < d; ++x) {
      m.at(r, u * d + x) = dir[x];
      m.at(r, v * d + x) = ff::neg(dir[x]);
    }
  }
  return m;
}

}  // namespace rigidity
