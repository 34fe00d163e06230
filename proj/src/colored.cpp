#include "rigidity/colored.hpp"

#include <algorithm>

#include "rigidity/errors.hpp"
#include "rigidity/rng.hpp"

namespace rigidity {

void ColoredMultigraph::validate() const {
  if (n < 0) throw Error("colored multigraph: negative vertex count");
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw Error("colored multigraph: vertex id out of range");
    if (e.u == e.v) throw Error("colored multigraph: self-loop");
    if (e.color < 0) throw Error("colored multigraph: negative color");
  }
}

int ColoredMultigraph::max_color() const {
  int mc = -1;
  for (const auto& e : edges) mc = std::max(mc, e.color);
  return mc;
}

ff::Matrix anchoring_matrix(const ColoredMultigraph& h, int d,
                            const std::vector<std::vector<uint64_t>>& points) {
  h.validate();
  if (d < 1) throw Error("anchoring_matrix: dimension must be positive");
  if (int(points.size()) <= h.max_color())
    throw Error("anchoring_matrix: one point per color required");
  ff::Matrix m(int(h.edges.size()), d * h.n);
  for (size_t r = 0; r < h.edges.size(); ++r) {
    const auto& e = h.edges[r];
    const auto& x = points[e.color];
    if (int(x.size()) != d) throw Error("anchoring_matrix: point dimension mismatch");
    for (int c = 0; c < d; ++c) {
      m.at(int(r), e.u * d + c) = x[c];
      m.at(int(r), e.v * d + c) = ff::neg(x[c]);
    }
  }
  return m;
}

bool is_d_anchored(const ColoredMultigraph& h, int d, uint64_t seed,
                   int trials) {
  h.validate();
  if (h.n == 0) throw Error("is_d_anchored: empty vertex set");
  if (trials < 1) throw Error("is_d_anchored: need at least one trial");
  int target = d * (h.n - 1);
  if (h.n == 1) return true;
  int colors = h.max_color() + 1;
  for (int t = 0; t < trials; ++t) {
    uint64_t ts =
        CounterRng::pair_hash({seed, 0x616e6368ULL}, uint64_t(t), 0);
    auto pts = generic_points(colors, d, ts);
    ff::Matrix m = anchoring_matrix(h, d, pts);
    if (ff::rank_destructive(m, target) == target) return true;
  }
  return false;
}

}  // namespace rigidity
