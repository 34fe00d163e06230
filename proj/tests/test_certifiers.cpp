#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "rigidity/certify.hpp"
#include "rigidity/engine.hpp"
#include "rigidity/errors.hpp"
#include "rigidity/graph_ops.hpp"
#include "rigidity/oracles.hpp"
#include "rigidity/randgraph.hpp"

using namespace rigidity;

TEST_CASE("Q graphs on the complete graph are complete") {
  Graph g = Graph::complete(12);
  Partition pi = Partition::contiguous_equipartition(12, 3);
  auto qs = build_Q_graphs(g, pi, 2, false);
  REQUIRE(qs.size() == 3);
  for (const auto& q : qs) {
    CHECK(q.graph.vertex_count() == 4);
    CHECK(q.graph.edge_count() == 6);
  }
  CHECK(qs[1].vertices == std::vector<int>{4, 5, 6, 7});
  // too few blocks for the dimension
  Partition two = Partition::contiguous_equipartition(12, 2);
  CHECK_THROWS_AS(build_Q_graphs(g, two, 2, false), HypothesisError);
  CHECK_NOTHROW(build_Q_graphs(g, two, 2, true));
}

TEST_CASE("Q edge requires d indices") {
  // blocks {0,1},{2,3},{4,5}; 0 and 1 joined through block 1 only
  Graph g(6, {{0, 2}, {2, 1}, {0, 4}, {3, 5}, {2, 4}});
  Partition pi(6, {{0, 1}, {2, 3}, {4, 5}});
  auto qs = build_Q_graphs(g, pi, 2, false);
  CHECK(qs[0].graph.edge_count() == 0);
  auto qs1 = build_Q_graphs(g, pi, 1, false);
  CHECK(qs1[0].graph.has_edge(0, 1));
}

TEST_CASE("comb on structured colorings") {
  using E = ColoredMultigraph::Edge;
  Bitset all = Bitset::full(3);
  // monochromatic triangle: removing the color disconnects everything
  CombResult mono = comb(3, {E{0, 1, 0}, E{1, 2, 0}, E{0, 2, 0}}, all);
  REQUIRE(mono.ok());
  CHECK(mono.tree->subset == std::vector<int>{0, 1, 2});
  CHECK(mono.tree->color == 0);
  // rainbow triangle: no single color separates
  CombResult rain = comb(3, {E{0, 1, 0}, E{1, 2, 1}, E{0, 2, 2}}, all);
  CHECK(!rain.ok());
  CHECK(rain.failed_subset == std::vector<int>{0, 1, 2});
  // edgeless subsets always split
  CHECK(comb(3, {}, all).ok());
  CHECK_THROWS_AS(comb(3, {}, Bitset(3)), Error);
  CHECK_THROWS_AS(comb(3, {E{0, 0, 1}}, all), Error);
  // the json tree records the cut color at internal nodes
  std::string j = comb_tree_json(*mono.tree);
  CHECK(j.find("\"color\":0") != std::string::npos);
  CHECK(j.find("\"subset\":[0,1,2]") != std::string::npos);
}

TEST_CASE("strong certifier accepts complete graphs and implies rigidity") {
  Graph g = Graph::complete(12);
  Partition pi = Partition::contiguous_equipartition(12, 3);
  CertifierVerdict v = certify_strong_partition(g, pi, 2, false, 17);
  CHECK(v.accepted);
  CHECK(v.failing == Obligation::kNone);
  CHECK(v.witness_json.find("\"reduced\"") != std::string::npos);
  CHECK(v.witness_json.find("\"Q\"") != std::string::npos);
  CHECK(is_d_rigid(g, 2).rigid);
}

TEST_CASE("strong certifier failure classes") {
  // reduced graph is a 4-cycle: flexible at d=2
  Graph ring(8, {{0, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 6}, {5, 7}, {6, 0}, {7, 1}});
  Partition pi4(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  CertifierVerdict r = certify_strong_partition(ring, pi4, 2, false, 3);
  CHECK(!r.accepted);
  CHECK(r.failing == Obligation::kReducedNotRigid);
  // rigid reduced graph but a disconnected Q_0
  Graph g(6, {{0, 2}, {2, 1}, {0, 4}, {3, 5}, {2, 4}});
  Partition pi3(6, {{0, 1}, {2, 3}, {4, 5}});
  CertifierVerdict q = certify_strong_partition(g, pi3, 2, false, 3);
  CHECK(!q.accepted);
  CHECK(q.failing == Obligation::kQNotConnected);
  CHECK(q.block == 0);
  CHECK(q.to_json().find("Q-not-connected") != std::string::npos);
}

TEST_CASE("strong acceptance is sound on random graphs") {
  int accepted = 0;
  for (int t = 0; t < 40; ++t) {
    Graph g = gnp(12, 0.75, {901, uint64_t(t)});
    Partition pi = random_equipartition(12, 4, {902, uint64_t(t)});
    CertifierVerdict v = certify_strong_partition(g, pi, 2, false, uint64_t(t));
    if (v.accepted) {
      ++accepted;
      CHECK(is_d_rigid(g, 2).rigid);
    }
  }
  CHECK(accepted > 0);  // p = .75 should certify at least once
}

TEST_CASE("generalized spec validation") {
  Graph g = Graph::complete(6);
  Partition pi = Partition::contiguous_equipartition(6, 3);
  GeneralizedPartitionSpec spec = GeneralizedPartitionSpec::from_strong(g, pi);
  CHECK(spec.point_count() == 4);
  CHECK_NOTHROW(spec.validate());
  CHECK(generalized_reduced_graph(spec) == Graph::complete(3));
  // sharing an edge between two subgraphs is rejected
  GeneralizedPartitionSpec dup = spec;
  dup.subgraphs[{0, 1}].push_back(dup.subgraphs[{0, 2}].front());
  CHECK_THROWS_AS(dup.validate(), Error);
  // support violation: a within-block edge placed in a crossing subgraph
  GeneralizedPartitionSpec bad = spec;
  bad.subgraphs[{1, 2}].emplace_back(0, 1);
  CHECK_THROWS_AS(bad.validate(), Error);
  // m_i below the block count
  GeneralizedPartitionSpec low = spec;
  low.m_i[0] = 2;
  CHECK_THROWS_AS(low.validate(), Error);
}

TEST_CASE("anchoring graph of the strong specialization") {
  Graph g = Graph::complete(8);
  Partition pi = Partition::contiguous_equipartition(8, 2);
  GeneralizedPartitionSpec spec = GeneralizedPartitionSpec::from_strong(g, pi);
  std::vector<int> verts;
  ColoredMultigraph h = anchoring_graph(spec, 0, &verts);
  CHECK(verts == std::vector<int>{0, 1, 2, 3});
  CHECK(h.n == 4);
  // colors 1 (through block 1) and 2 (own induced subgraph), each joining
  // every pair: 6 + 6 edges
  CHECK(h.edges.size() == 12);
  CHECK(is_d_anchored(h, 2, 5));
}

TEST_CASE("anchored is strictly stronger than tree packing") {
  // red {0,1},{0,2}; blue {1,2}; green {1,2}: packs two trees but is not
  // 2-anchored
  ColoredMultigraph h;
  h.n = 3;
  h.edges = {{0, 1, 0}, {0, 2, 0}, {1, 2, 1}, {1, 2, 2}};
  oracles::Multigraph m{3, {{0, 1}, {0, 2}, {1, 2}, {1, 2}}};
  CHECK(oracles::tree_packing_count(m) == 2);
  CHECK(!is_d_anchored(h, 2, 7, 4));
  // two parallel edges in distinct colors anchor a single pair at d=2
  ColoredMultigraph pair;
  pair.n = 2;
  pair.edges = {{0, 1, 0}, {0, 1, 1}};
  CHECK(is_d_anchored(pair, 2, 7));
  CHECK(!is_d_anchored(pair, 3, 7, 4));
}

TEST_CASE("generalized certifier on the strong specialization") {
  Graph g = Graph::complete(12);
  Partition pi = Partition::contiguous_equipartition(12, 3);
  GeneralizedPartitionSpec spec = GeneralizedPartitionSpec::from_strong(g, pi);
  CertifierVerdict v = certify_generalized_partition(spec, 2, 23);
  CHECK(v.accepted);
  CHECK(v.witness_json.find("\"comb\"") != std::string::npos);
  CHECK(is_d_rigid(g, 2).rigid);
}

TEST_CASE("generalized certifier comb failure witness") {
  // one block carrying a rainbow triangle across three within-block
  // subgraphs: no monochromatic cut exists
  GeneralizedPartitionSpec spec;
  spec.graph = Graph::complete(3);
  spec.partition = Partition(3, {{0, 1, 2}});
  spec.m_i = {4};
  spec.subgraphs[{0, 1}] = {{0, 1}};
  spec.subgraphs[{0, 2}] = {{1, 2}};
  spec.subgraphs[{0, 3}] = {{0, 2}};
  CertifierVerdict v = certify_generalized_partition(spec, 2, 5);
  CHECK(!v.accepted);
  CHECK(v.failing == Obligation::kCombFailed);
  CHECK(v.block == 0);
  CHECK(v.subset == std::vector<int>{0, 1, 2});
  CHECK(!monochromatic_cuts_exhaustive(spec, 0));
}

TEST_CASE("comb success matches the exhaustive cut check") {
  for (int t = 0; t < 30; ++t) {
    Graph g = gnp(10, 0.5, {333, uint64_t(t)});
    Partition pi = Partition::contiguous_equipartition(10, 2);
    GeneralizedPartitionSpec spec = GeneralizedPartitionSpec::from_strong(g, pi);
    // from_strong puts all within-block edges in one subgraph, so cuts
    // always exist
    CHECK(monochromatic_cuts_exhaustive(spec, 0));
    CHECK(monochromatic_cuts_exhaustive(spec, 1));
  }
}

TEST_CASE("assembled limit framework of an accepted instance is rigid") {
  Graph g = Graph::complete(12);
  Partition pi = Partition::contiguous_equipartition(12, 3);
  GeneralizedPartitionSpec spec = GeneralizedPartitionSpec::from_strong(g, pi);
  int n = g.vertex_count();
  std::vector<CombResult> trees;
  for (int i = 0; i < 3; ++i) {
    std::vector<int> verts = pi.block(i).to_vector();
    std::vector<ColoredMultigraph::Edge> edges;
    InducedSubgraph sub = induced_subgraph(g, pi.block(i));
    for (auto [u, v] : sub.graph.edges())
      edges.push_back(ColoredMultigraph::Edge{u, v, 3});  // color m, as in from_strong
    (void)n;
    trees.push_back(comb(int(verts.size()), edges, Bitset::full(int(verts.size()))));
    REQUIRE(trees.back().ok());
  }
  auto pts = generic_points(spec.point_count(), 2, 41);
  LimitFrameworkSpec l = assemble_limit_framework(spec, trees, pts);
  CHECK(l.graph.vertex_count() == 12);
  RigidityVerdict v = is_limit_inf_rigid(l);
  CHECK(v.rigid);
}

TEST_CASE("double certifier accepts a braced complete instance") {
  Graph g = Graph::complete(12);
  DoublePartitionSpec spec;
  spec.graph = g;
  spec.partition = Partition::contiguous_equipartition(12, 3);
  spec.sub_blocks = {{{0, 1}, {2, 3}}, {{4, 5}, {6, 7}}, {{8, 9}, {10, 11}}};
  spec.forests = {{{0, 2}, {0, 3}, {1, 2}},
                  {{4, 6}, {4, 7}, {5, 6}},
                  {{8, 10}, {8, 11}, {9, 10}}};
  CertifierVerdict v = certify_double_partition(spec, 2, 11);
  CHECK(v.accepted);
  CHECK(is_d_rigid(g, 2).rigid);
}

TEST_CASE("double certifier failure classes and validation") {
  Graph g = Graph::complete(12);
  DoublePartitionSpec spec;
  spec.graph = g;
  spec.partition = Partition::contiguous_equipartition(12, 3);
  spec.sub_blocks = {{{0, 1}, {2, 3}}, {{4, 5}, {6, 7}}, {{8, 9}, {10, 11}}};
  spec.forests = {{{0, 2}}, {{4, 6}, {4, 7}, {5, 6}}, {{8, 10}, {8, 11}, {9, 10}}};
  // a single contracted edge packs one tree, not two
  CertifierVerdict v = certify_double_partition(spec, 2, 11);
  CHECK(!v.accepted);
  CHECK(v.failing == Obligation::kTreePackingFailed);
  CHECK(v.block == 0);
  // cycles are rejected outright
  DoublePartitionSpec cyc = spec;
  cyc.forests[0] = {{0, 2}, {2, 1}, {1, 3}, {3, 0}};
  CHECK_THROWS_AS(certify_double_partition(cyc, 2, 11), Error);
  // forest edge leaving its block
  DoublePartitionSpec out = spec;
  out.forests[0] = {{0, 4}};
  CHECK_THROWS_AS(certify_double_partition(out, 2, 11), Error);
  // sub-blocks must partition each block
  DoublePartitionSpec cover = spec;
  cover.sub_blocks[0] = {{0, 1}, {2}};
  CHECK_THROWS_AS(certify_double_partition(cover, 2, 11), Error);
}

TEST_CASE("double certifier catches a split sub-block") {
  // remove every cross connection that would join 0 and 1 through at
  // least two foreign blocks
  Graph full = Graph::complete(12);
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : full.edges()) {
    if ((u == 0 || u == 1) && v >= 8) continue;  // cut block 2 off from {0,1}
    edges.emplace_back(u, v);
  }
  DoublePartitionSpec spec;
  spec.graph = Graph(12, edges);
  spec.partition = Partition::contiguous_equipartition(12, 3);
  spec.sub_blocks = {{{0, 1}, {2, 3}}, {{4, 5}, {6, 7}}, {{8, 9}, {10, 11}}};
  spec.forests = {{{0, 2}, {0, 3}, {1, 2}},
                  {{4, 6}, {4, 7}, {5, 6}},
                  {{8, 10}, {8, 11}, {9, 10}}};
  CertifierVerdict v = certify_double_partition(spec, 2, 11);
  CHECK(!v.accepted);
  CHECK(v.failing == Obligation::kQNotConnected);
  CHECK(v.block == 0);
  CHECK(v.detail == "sub-block 0");
}
