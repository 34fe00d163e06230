#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "rigidity/colored.hpp"
#include "rigidity/engine.hpp"
#include "rigidity/framework.hpp"
#include "rigidity/graph.hpp"
#include "rigidity/partition.hpp"

namespace rigidity {

// Q_i relabeled to local ids; vertices maps back to V_i.
struct QGraph {
  std::vector<int> vertices;
  Graph graph;
};

// Q_i has an edge {u,v} iff u,v are connected in G[V_i,V_j] for at least
// d distinct indices j (including j == i only when allow_self).
std::vector<QGraph> build_Q_graphs(const Graph& g, const Partition& pi, int d,
                                   bool allow_self);

enum class Obligation {
  kNone,
  kReducedNotRigid,
  kQNotConnected,
  kCombFailed,
  kAnchoringFailed,
  kTreePackingFailed,
  kHypothesisViolated,
};

const char* obligation_name(Obligation o);

struct CertifierVerdict {
  bool accepted = false;
  Obligation failing = Obligation::kNone;
  int block = -1;                // for per-block failures
  std::vector<int> subset;       // comb failure witness
  std::string detail;
  std::string witness_json;      // replayable certificate when accepted

  std::string to_json() const;
};

// Recursion tree of monochromatic cuts: at each node, every Ghat-edge
// between left and right has the node's color.
struct CombNode {
  std::vector<int> subset;
  int color = -1;  // unused at leaves
  std::unique_ptr<CombNode> left, right;
};

struct CombResult {
  std::unique_ptr<CombNode> tree;   // set on success
  std::vector<int> failed_subset;   // set on failure
  bool ok() const { return tree != nullptr; }
};

// Colors are tried in ascending index; the split takes the connected
// component containing the lowest vertex. Failure returns the first subset
// admitting no monochromatic cut.
CombResult comb(int n, const std::vector<ColoredMultigraph::Edge>& edges,
                const Bitset& u);

std::string comb_tree_json(const CombNode& node);

// Accepts iff the reduced graph is d-rigid and every Q_i is connected.
// Acceptance implies G is d-rigid; rejection is inconclusive.
CertifierVerdict certify_strong_partition(const Graph& g, const Partition& pi,
                                          int d, bool allow_self,
                                          uint64_t seed);

// Pairwise edge-disjoint subgraphs G_ij indexed by (i,j), 0 <= i < m,
// i < j < m_i. For j < m, V(G_ij) = V_i ∪ V_j; for j >= m, V(G_ij) = V_i.
struct GeneralizedPartitionSpec {
  Graph graph;
  Partition partition;
  std::vector<int> m_i;  // per block, each >= m
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> subgraphs;

  int block_count() const { return partition.block_count(); }
  int point_count() const;  // max m_i
  void validate() const;    // throws on invariant violations

  // The strong-partition specialization: G_ij = G[V_i,V_j] for j < m and
  // G_{i,m} = G[V_i].
  static GeneralizedPartitionSpec from_strong(const Graph& g,
                                              const Partition& pi);
};

// Edge-colored multigraph on V_i recording which vertex pairs are joined
// through each subgraph G_ij (color j), relabeled to local ids.
ColoredMultigraph anchoring_graph(const GeneralizedPartitionSpec& spec,
                                  int block, std::vector<int>* vertices_out);

Graph generalized_reduced_graph(const GeneralizedPartitionSpec& spec);

// Accepts iff comb succeeds on every block, every anchoring graph is
// d-anchored, and the reduced graph is d-rigid.
CertifierVerdict certify_generalized_partition(
    const GeneralizedPartitionSpec& spec, int d, uint64_t seed);

struct DoublePartitionSpec {
  Graph graph;
  Partition partition;
  // sub_blocks[i] partitions block i; forests[i] is an edge list inside V_i.
  std::vector<std::vector<std::vector<int>>> sub_blocks;
  std::vector<std::vector<std::pair<int, int>>> forests;
};

// Accepts iff the reduced graph is d-rigid, each forest contracted along
// the sub-blocks packs d edge-disjoint spanning trees, and every Q_ij is
// connected.
CertifierVerdict certify_double_partition(const DoublePartitionSpec& spec,
                                          int d, uint64_t seed);

// Limit framework of the generalized-partition proof: p(v) = x_i on V_i,
// edges of G_ij get direction x_i - x_j. The comb trees are the evidence
// that this is a genuine limit framework; one is required per block.
LimitFrameworkSpec assemble_limit_framework(
    const GeneralizedPartitionSpec& spec,
    const std::vector<CombResult>& comb_trees,
    const std::vector<std::vector<uint64_t>>& points);

// Exhaustive monochromatic-cuts check over all subsets of a block
// (test-only ground truth; |V_i| <= 18).
bool monochromatic_cuts_exhaustive(const GeneralizedPartitionSpec& spec,
                                   int block);

}  // namespace rigidity
