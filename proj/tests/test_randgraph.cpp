#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "rigidity/errors.hpp"
#include "rigidity/graph_ops.hpp"
#include "rigidity/oracles.hpp"
#include "rigidity/randgraph.hpp"

using namespace rigidity;

TEST_CASE("gnp determinism and pair addressing") {
  Graph a = gnp(40, 0.3, {5, 9});
  CHECK(a == gnp(40, 0.3, {5, 9}));
  CHECK(!(a == gnp(40, 0.3, {5, 10})));
  CHECK(!(a == gnp(40, 0.3, {6, 9})));
  // the indicator of a pair depends only on (spec, u, v): a prefix of the
  // vertex set induces the smaller sample
  Graph small = gnp(20, 0.3, {5, 9});
  Bitset prefix(40);
  for (int v = 0; v < 20; ++v) prefix.set(v);
  InducedSubgraph sub = induced_subgraph(a, prefix);
  CHECK(sub.graph == small);
}

TEST_CASE("gnp endpoints and density") {
  CHECK(gnp(30, 0.0, {1, 0}).edge_count() == 0);
  CHECK(gnp(30, 1.0, {1, 0}).edge_count() == 435);
  int edges = gnp(200, 0.3, {2, 0}).edge_count();
  double expect = 0.3 * 199 * 100;  // 5970
  CHECK(edges > expect * 0.9);
  CHECK(edges < expect * 1.1);
}

TEST_CASE("random regular graphs are simple and regular") {
  for (int t = 0; t < 20; ++t) {
    Graph g = random_regular(12, 5, {71, uint64_t(t)});
    for (int v = 0; v < 12; ++v) CHECK(g.degree(v) == 5);
  }
  Graph big = random_regular(200, 20, {9, 0});
  CHECK(big.min_degree() == 20);
  CHECK(big.edge_count() == 2000);
  CHECK(random_regular(12, 5, {71, 3}) == random_regular(12, 5, {71, 3}));
  // r = n-1 forces the complete graph
  CHECK(random_regular(6, 5, {1, 0}) == Graph::complete(6));
  CHECK_THROWS_AS(random_regular(5, 3, {1, 0}), Error);  // odd sum
  CHECK_THROWS_AS(random_regular(5, 5, {1, 0}), Error);  // r >= n
}

TEST_CASE("random equipartition shape and determinism") {
  Partition pi = random_equipartition(11, 3, {33, 4});
  CHECK(pi.block_count() == 3);
  CHECK(pi.sizes() == std::vector<int>{4, 4, 3});
  CHECK(random_equipartition(11, 3, {33, 4}).block_of(7) == pi.block_of(7));
  // assignments vary with the stream
  bool moved = false;
  for (int t = 0; t < 10 && !moved; ++t)
    moved = random_equipartition(11, 3, {33, uint64_t(t)}).block_of(0) !=
            pi.block_of(0);
  CHECK(moved);
}

TEST_CASE("partition codegree") {
  Graph k4 = Graph::complete(4);
  CHECK(delta2_of_partition(k4, Partition::singletons(4)) == 2);
  CHECK(delta2_of_partition(k4, Partition(4, {{0, 1}, {2, 3}})) == 1);
  // adjacent path vertices share no neighbor
  CHECK(delta2_of_partition(Graph::path(3), Partition::singletons(3)) == 0);
  CHECK(delta2_of_partition(Graph::cycle(4), Partition::singletons(4)) == 0);
}

TEST_CASE("codegree partition statistics") {
  Graph g = gnp(40, 0.5, {12, 0});
  CodegreeStats st = codegree_partition_stats(g, 5, 20, {90, 100});
  REQUIRE(st.samples.size() == 20);
  CHECK(st.min == *std::min_element(st.samples.begin(), st.samples.end()));
  double mean = 0;
  for (int s : st.samples) mean += s;
  CHECK(st.mean == doctest::Approx(mean / 20));
  CHECK(st.fraction_at_least(0) == 1.0);
  CHECK(st.fraction_at_least(st.min) == 1.0);
  CHECK(st.fraction_at_least(st.min + 100) == 0.0);
  // determinism across calls
  CodegreeStats st2 = codegree_partition_stats(g, 5, 20, {90, 100});
  CHECK(st.samples == st2.samples);
}
