#include "rigidity/certify.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "nlohmann/json.hpp"
#include "rigidity/errors.hpp"
#include "rigidity/graph_ops.hpp"
#include "rigidity/oracles.hpp"
#include "rigidity/rng.hpp"

namespace rigidity {

namespace {

using json = nlohmann::json;

// Union-find over local ids.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

uint64_t sub_seed(uint64_t seed, uint64_t stream, uint64_t a) {
  return CounterRng::pair_hash({seed, stream}, a, 0);
}

json graph_edges_json(const Graph& g, const std::vector<int>& vertices) {
  json edges = json::array();
  for (auto [u, v] : g.edges())
    edges.push_back({vertices[u], vertices[v]});
  return edges;
}

// Per-pair count of indices j such that u,v in V_i are connected in
// G[V_i, V_j]. Local |V_i| x |V_i| matrix.
std::vector<std::vector<int>> q_pair_counts(const Graph& g, const Partition& pi,
                                            int i, bool allow_self) {
  int m = pi.block_count();
  std::vector<int> verts = pi.block(i).to_vector();
  int sz = int(verts.size());
  std::vector<int> local(g.vertex_count(), -1);
  for (int a = 0; a < sz; ++a) local[verts[a]] = a;
  std::vector<std::vector<int>> counts(sz, std::vector<int>(sz, 0));
  for (int j = 0; j < m; ++j) {
    if (j == i && !allow_self) continue;
    InducedSubgraph sub = j == i ? induced_subgraph(g, pi.block(i))
                                 : induced_bipartite(g, pi.block(i), pi.block(j));
    Dsu dsu(sub.graph.vertex_count());
    for (auto [a, b] : sub.graph.edges()) dsu.unite(a, b);
    // roots of V_i members inside this subgraph
    std::vector<int> root(sz, -1);
    for (int t = 0; t < sub.graph.vertex_count(); ++t) {
      int lv = local[sub.vertices[t]];
      if (lv >= 0) root[lv] = dsu.find(t);
    }
    for (int a = 0; a < sz; ++a)
      for (int b = a + 1; b < sz; ++b)
        if (root[a] >= 0 && root[a] == root[b]) {
          ++counts[a][b];
          ++counts[b][a];
        }
  }
  return counts;
}

}  // namespace

std::vector<QGraph> build_Q_graphs(const Graph& g, const Partition& pi, int d,
                                   bool allow_self) {
  if (pi.n() != g.vertex_count())
    throw Error("build_Q_graphs: partition size mismatch");
  int m = pi.block_count();
  int need = allow_self ? d : d + 1;
  if (m < need)
    throw HypothesisError("build_Q_graphs: too few blocks for dimension");
  std::vector<QGraph> out;
  for (int i = 0; i < m; ++i) {
    std::vector<int> verts = pi.block(i).to_vector();
    int sz = int(verts.size());
    auto counts = q_pair_counts(g, pi, i, allow_self);
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < sz; ++a)
      for (int b = a + 1; b < sz; ++b)
        if (counts[a][b] >= d) edges.emplace_back(a, b);
    out.push_back({std::move(verts), Graph(sz, std::move(edges))});
  }
  return out;
}

const char* obligation_name(Obligation o) {
  switch (o) {
    case Obligation::kNone: return "none";
    case Obligation::kReducedNotRigid: return "reduced-not-rigid";
    case Obligation::kQNotConnected: return "Q-not-connected";
    case Obligation::kCombFailed: return "comb-failed";
    case Obligation::kAnchoringFailed: return "anchoring-failed";
    case Obligation::kTreePackingFailed: return "tree-packing-failed";
    case Obligation::kHypothesisViolated: return "hypothesis-violated";
  }
  return "unknown";
}

std::string CertifierVerdict::to_json() const {
  json j;
  j["accepted"] = accepted;
  j["failing_obligation"] = obligation_name(failing);
  if (block >= 0) j["block"] = block;
  if (!subset.empty()) j["subset"] = subset;
  if (!detail.empty()) j["detail"] = detail;
  if (!witness_json.empty()) j["witness"] = json::parse(witness_json);
  return j.dump();
}

namespace {

struct CombCtx {
  int n;
  const std::vector<ColoredMultigraph::Edge>* edges;
  std::vector<int> failed;  // set on failure
};

std::unique_ptr<CombNode> comb_rec(CombCtx& ctx, const Bitset& u) {
  auto node = std::make_unique<CombNode>();
  node->subset = u.to_vector();
  if (node->subset.size() == 1) return node;

  std::vector<const ColoredMultigraph::Edge*> within;
  std::set<int> colors;
  for (const auto& e : *ctx.edges)
    if (u.test(e.u) && u.test(e.v)) {
      within.push_back(&e);
      colors.insert(e.color);
    }
  if (colors.empty()) colors.insert(0);  // edgeless: any colour cuts

  for (int c : colors) {
    Dsu dsu(ctx.n);
    for (const auto* e : within)
      if (e->color != c) dsu.unite(e->u, e->v);
    int lowest = node->subset.front();
    Bitset left(u.capacity());
    bool proper = false;
    for (int v : node->subset) {
      if (dsu.find(v) == dsu.find(lowest))
        left.set(v);
      else
        proper = true;
    }
    if (!proper) continue;
    node->color = c;
    Bitset right = u;
    right.subtract(left);
    node->left = comb_rec(ctx, left);
    if (!node->left) return nullptr;
    node->right = comb_rec(ctx, right);
    if (!node->right) return nullptr;
    return node;
  }
  ctx.failed = node->subset;
  return nullptr;
}

}  // namespace

CombResult comb(int n, const std::vector<ColoredMultigraph::Edge>& edges,
                const Bitset& u) {
  for (const auto& e : edges)
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v || e.color < 0)
      throw Error("comb: bad edge");
  if (u.none()) throw Error("comb: empty subset");
  CombCtx ctx{n, &edges, {}};
  CombResult r;
  r.tree = comb_rec(ctx, u);
  if (!r.tree) r.failed_subset = std::move(ctx.failed);
  return r;
}

namespace {

json comb_node_json(const CombNode& node) {
  json j;
  j["subset"] = node.subset;
  if (node.left) {
    j["color"] = node.color;
    j["left"] = comb_node_json(*node.left);
    j["right"] = comb_node_json(*node.right);
  }
  return j;
}

}  // namespace

std::string comb_tree_json(const CombNode& node) {
  return comb_node_json(node).dump();
}

CertifierVerdict certify_strong_partition(const Graph& g, const Partition& pi,
                                          int d, bool allow_self,
                                          uint64_t seed) {
  CertifierVerdict v;
  Graph reduced = reduced_graph(g, pi);
  RigidityVerdict rv =
      is_d_rigid(reduced, d, sub_seed(seed, 0x726564ULL, 0));
  if (!rv.rigid) {
    v.failing = Obligation::kReducedNotRigid;
    v.detail = rv.to_json();
    return v;
  }
  auto qs = build_Q_graphs(g, pi, d, allow_self);
  for (int i = 0; i < int(qs.size()); ++i)
    if (!oracles::connected(qs[i].graph)) {
      v.failing = Obligation::kQNotConnected;
      v.block = i;
      return v;
    }
  v.accepted = true;
  json w;
  w["reduced"] = json::parse(rv.to_json());
  w["Q"] = json::array();
  for (const auto& q : qs) w["Q"].push_back(graph_edges_json(q.graph, q.vertices));
  v.witness_json = w.dump();
  return v;
}

int GeneralizedPartitionSpec::point_count() const {
  int mc = block_count();
  for (int mi : m_i) mc = std::max(mc, mi);
  return mc;
}

void GeneralizedPartitionSpec::validate() const {
  int m = block_count();
  if (partition.n() != graph.vertex_count())
    throw Error("generalized partition: partition size mismatch");
  if (int(m_i.size()) != m)
    throw Error("generalized partition: one bound m_i per block required");
  for (int mi : m_i)
    if (mi < m) throw Error("generalized partition: m_i < m");
  std::set<std::pair<int, int>> all_edges;
  for (const auto& [key, edges] : subgraphs) {
    auto [i, j] = key;
    if (i < 0 || i >= m || j <= i || j >= m_i[i])
      throw Error("generalized partition: subgraph index out of range");
    Bitset support =
        j < m ? partition.block(i) | partition.block(j) : partition.block(i);
    for (auto [u, v] : edges) {
      if (u == v || u < 0 || v < 0 || u >= graph.vertex_count() ||
          v >= graph.vertex_count())
        throw Error("generalized partition: bad edge");
      if (!support.test(u) || !support.test(v))
        throw Error("generalized partition: edge outside subgraph support");
      if (!graph.has_edge(u, v))
        throw Error("generalized partition: edge not in G");
      if (!all_edges.insert({std::min(u, v), std::max(u, v)}).second)
        throw Error("generalized partition: subgraphs share an edge");
    }
  }
}

GeneralizedPartitionSpec GeneralizedPartitionSpec::from_strong(
    const Graph& g, const Partition& pi) {
  GeneralizedPartitionSpec spec;
  spec.graph = g;
  spec.partition = pi;
  int m = pi.block_count();
  spec.m_i.assign(m, m + 1);
  for (auto [u, v] : g.edges()) {
    int i = pi.block_of(u), j = pi.block_of(v);
    if (i > j) std::swap(i, j);
    spec.subgraphs[{i, i == j ? m : j}].emplace_back(u, v);
  }
  return spec;
}

ColoredMultigraph anchoring_graph(const GeneralizedPartitionSpec& spec,
                                  int block, std::vector<int>* vertices_out) {
  int n = spec.graph.vertex_count();
  std::vector<int> verts = spec.partition.block(block).to_vector();
  int sz = int(verts.size());
  std::vector<int> local(n, -1);
  for (int a = 0; a < sz; ++a) local[verts[a]] = a;
  ColoredMultigraph h;
  h.n = sz;
  for (const auto& [key, edges] : spec.subgraphs) {
    auto [i, j] = key;
    int color;
    if (i == block)
      color = j;
    else if (j == block)
      color = i;
    else
      continue;
    Dsu dsu(n);
    for (auto [u, v] : edges) dsu.unite(u, v);
    for (int a = 0; a < sz; ++a)
      for (int b = a + 1; b < sz; ++b)
        if (dsu.find(verts[a]) == dsu.find(verts[b]))
          h.edges.push_back({a, b, color});
  }
  if (vertices_out) *vertices_out = std::move(verts);
  return h;
}

Graph generalized_reduced_graph(const GeneralizedPartitionSpec& spec) {
  int m = spec.block_count();
  std::vector<std::pair<int, int>> edges;
  for (const auto& [key, sub_edges] : spec.subgraphs) {
    auto [i, j] = key;
    if (j >= m) continue;
    for (auto [u, v] : sub_edges)
      if (spec.partition.block_of(u) != spec.partition.block_of(v)) {
        edges.emplace_back(i, j);
        break;
      }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(m, std::move(edges));
}

namespace {

// Within-block edges of all subgraphs touching `block`, relabeled to local
// ids and colored by the other subgraph index.
std::vector<ColoredMultigraph::Edge> within_block_edges(
    const GeneralizedPartitionSpec& spec, int block,
    const std::vector<int>& local) {
  std::vector<ColoredMultigraph::Edge> out;
  for (const auto& [key, edges] : spec.subgraphs) {
    auto [i, j] = key;
    int color;
    if (i == block)
      color = j;
    else if (j == block)
      color = i;
    else
      continue;
    for (auto [u, v] : edges)
      if (local[u] >= 0 && local[v] >= 0)
        out.push_back({local[u], local[v], color});
  }
  return out;
}

}  // namespace

CertifierVerdict certify_generalized_partition(
    const GeneralizedPartitionSpec& spec, int d, uint64_t seed) {
  spec.validate();
  CertifierVerdict v;
  int m = spec.block_count();
  int n = spec.graph.vertex_count();

  std::vector<CombResult> trees;
  for (int i = 0; i < m; ++i) {
    std::vector<int> verts = spec.partition.block(i).to_vector();
    std::vector<int> local(n, -1);
    for (size_t a = 0; a < verts.size(); ++a) local[verts[a]] = int(a);
    auto edges = within_block_edges(spec, i, local);
    CombResult r = comb(int(verts.size()), edges, Bitset::full(int(verts.size())));
    if (!r.ok()) {
      v.failing = Obligation::kCombFailed;
      v.block = i;
      for (int lv : r.failed_subset) v.subset.push_back(verts[lv]);
      return v;
    }
    trees.push_back(std::move(r));
  }

  for (int i = 0; i < m; ++i) {
    ColoredMultigraph h = anchoring_graph(spec, i, nullptr);
    if (!is_d_anchored(h, d, sub_seed(seed, 0x616e63ULL, uint64_t(i)))) {
      v.failing = Obligation::kAnchoringFailed;
      v.block = i;
      return v;
    }
  }

  Graph reduced = generalized_reduced_graph(spec);
  RigidityVerdict rv = is_d_rigid(reduced, d, sub_seed(seed, 0x726564ULL, 0));
  if (!rv.rigid) {
    v.failing = Obligation::kReducedNotRigid;
    v.detail = rv.to_json();
    return v;
  }

  v.accepted = true;
  json w;
  w["reduced"] = json::parse(rv.to_json());
  w["comb"] = json::array();
  for (const auto& t : trees) w["comb"].push_back(json::parse(comb_tree_json(*t.tree)));
  v.witness_json = w.dump();
  return v;
}

CertifierVerdict certify_double_partition(const DoublePartitionSpec& spec,
                                          int d, uint64_t seed) {
  const Graph& g = spec.graph;
  const Partition& pi = spec.partition;
  int n = g.vertex_count();
  int m = pi.block_count();
  if (pi.n() != n) throw Error("double partition: partition size mismatch");
  if (int(spec.sub_blocks.size()) != m || int(spec.forests.size()) != m)
    throw Error("double partition: one sub-partition and forest per block required");

  // sub_id[v]: index of v's sub-block within its block
  std::vector<int> sub_id(n, -1);
  for (int i = 0; i < m; ++i) {
    Bitset covered(n);
    for (size_t j = 0; j < spec.sub_blocks[i].size(); ++j) {
      const auto& sb = spec.sub_blocks[i][j];
      if (sb.empty()) throw Error("double partition: empty sub-block");
      for (int v : sb) {
        if (v < 0 || v >= n || !pi.block(i).test(v) || covered.test(v))
          throw Error("double partition: sub-blocks do not partition the block");
        covered.set(v);
        sub_id[v] = int(j);
      }
    }
    if (covered.count() != pi.block(i).count())
      throw Error("double partition: sub-blocks do not partition the block");
    Dsu dsu(n);
    for (auto [u, v] : spec.forests[i]) {
      if (!g.has_edge(u, v) || !pi.block(i).test(u) || !pi.block(i).test(v))
        throw Error("double partition: forest edge outside G[V_i]");
      if (!dsu.unite(u, v)) throw Error("double partition: forest has a cycle");
    }
  }

  CertifierVerdict v;
  Graph reduced = reduced_graph(g, pi);
  RigidityVerdict rv = is_d_rigid(reduced, d, sub_seed(seed, 0x726564ULL, 0));
  if (!rv.rigid) {
    v.failing = Obligation::kReducedNotRigid;
    v.detail = rv.to_json();
    return v;
  }

  for (int i = 0; i < m; ++i) {
    int k = int(spec.sub_blocks[i].size());
    if (k == 1) continue;  // one vertex after contraction: d trees vacuous
    oracles::Multigraph contracted;
    contracted.n = k;
    for (auto [u, v] : spec.forests[i])
      if (sub_id[u] != sub_id[v]) contracted.edges.emplace_back(sub_id[u], sub_id[v]);
    if (oracles::tree_packing_count(contracted) < d) {
      v.failing = Obligation::kTreePackingFailed;
      v.block = i;
      return v;
    }
  }

  for (int i = 0; i < m; ++i) {
    auto counts = q_pair_counts(g, pi, i, /*allow_self=*/false);
    std::vector<int> verts = pi.block(i).to_vector();
    std::vector<int> local(n, -1);
    for (size_t a = 0; a < verts.size(); ++a) local[verts[a]] = int(a);
    for (size_t j = 0; j < spec.sub_blocks[i].size(); ++j) {
      const auto& sb = spec.sub_blocks[i][j];
      Dsu dsu(int(sb.size()));
      for (size_t a = 0; a < sb.size(); ++a)
        for (size_t b = a + 1; b < sb.size(); ++b)
          if (counts[local[sb[a]]][local[sb[b]]] >= d) dsu.unite(int(a), int(b));
      bool conn = true;
      for (size_t a = 1; a < sb.size(); ++a) conn &= (dsu.find(int(a)) == dsu.find(0));
      if (!conn) {
        v.failing = Obligation::kQNotConnected;
        v.block = i;
        v.detail = "sub-block " + std::to_string(j);
        return v;
      }
    }
  }

  v.accepted = true;
  json w;
  w["reduced"] = json::parse(rv.to_json());
  v.witness_json = w.dump();
  return v;
}

LimitFrameworkSpec assemble_limit_framework(
    const GeneralizedPartitionSpec& spec,
    const std::vector<CombResult>& comb_trees,
    const std::vector<std::vector<uint64_t>>& points) {
  spec.validate();
  int m = spec.block_count();
  if (int(comb_trees.size()) != m)
    throw Error("assemble_limit_framework: one comb tree per block required");
  for (const auto& t : comb_trees)
    if (!t.ok()) throw Error("assemble_limit_framework: missing comb tree");
  if (int(points.size()) < spec.point_count())
    throw Error("assemble_limit_framework: not enough points");
  int d = int(points.front().size());
  int n = spec.graph.vertex_count();

  // Ghat edge -> direction index pair (a, b) meaning x_a - x_b.
  std::map<std::pair<int, int>, std::pair<int, int>> dir_of;
  for (const auto& [key, edges] : spec.subgraphs) {
    auto [i, j] = key;
    for (auto [u, v] : edges) {
      std::pair<int, int> e{std::min(u, v), std::max(u, v)};
      int bu = spec.partition.block_of(e.first);
      int bv = spec.partition.block_of(e.second);
      // Within-block edges take x_i - x_j: the comb node separating the
      // endpoints necessarily has the edge's own subgraph colour, since the
      // edge crosses that cut.
      dir_of[e] = bu == bv ? std::pair<int, int>{bu == i ? i : j, bu == i ? j : i}
                           : std::pair<int, int>{bu, bv};
    }
  }

  LimitFrameworkSpec l;
  l.d = d;
  std::vector<std::pair<int, int>> edge_list;
  for (const auto& [e, dir] : dir_of) edge_list.push_back(e);
  l.graph = Graph(n, std::move(edge_list));
  l.positions.resize(n);
  for (int v = 0; v < n; ++v) l.positions[v] = points[spec.partition.block_of(v)];
  for (auto e : l.graph.edges()) {
    auto [a, b] = dir_of.at(e);
    std::vector<uint64_t> dir(d);
    for (int x = 0; x < d; ++x) dir[x] = ff::sub(points[a][x], points[b][x]);
    l.directions.push_back(std::move(dir));
  }
  return l;
}

bool monochromatic_cuts_exhaustive(const GeneralizedPartitionSpec& spec,
                                   int block) {
  spec.validate();
  std::vector<int> verts = spec.partition.block(block).to_vector();
  int sz = int(verts.size());
  if (sz > 18)
    throw CapExceededError("monochromatic_cuts_exhaustive: block exceeds cap of 18");
  std::vector<int> local(spec.graph.vertex_count(), -1);
  for (int a = 0; a < sz; ++a) local[verts[a]] = a;
  auto edges = within_block_edges(spec, block, local);
  for (uint32_t mask = 1; mask < (1u << sz); ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::set<int> colors;
    for (const auto& e : edges)
      if ((mask >> e.u & 1) && (mask >> e.v & 1)) colors.insert(e.color);
    colors.insert(-1);  // -1: remove nothing; catches already-disconnected U
    bool cut = false;
    for (int c : colors) {
      Dsu dsu(sz);
      int parts = std::popcount(mask);
      for (const auto& e : edges)
        if ((mask >> e.u & 1) && (mask >> e.v & 1) && e.color != c)
          if (dsu.unite(e.u, e.v)) --parts;
      if (parts > 1) {
        cut = true;
        break;
      }
    }
    if (!cut) return false;
  }
  return true;
}

}  // namespace rigidity
