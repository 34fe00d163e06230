#pragma once

#include <cstdint>
#include <vector>

#include "rigidity/ff.hpp"
#include "rigidity/graph.hpp"

namespace rigidity {

// A graph with a d-dimensional position per vertex (field coordinates).
struct FrameworkSpec {
  Graph graph;
  int d = 0;
  std::vector<std::vector<uint64_t>> positions;  // one d-vector per vertex
};

// Positions plus a direction per edge: g(u,e) for the smaller endpoint u,
// with g(v,e) = -g(u,e) implied. Directions are unnormalized; row scaling
// never changes rank and F_q has no norm.
struct LimitFrameworkSpec {
  Graph graph;
  int d = 0;
  std::vector<std::vector<uint64_t>> positions;
  std::vector<std::vector<uint64_t>> directions;  // per edge, index-aligned
};

// |E| x d*n matrix; the row of edge {u,v} carries p(u)-p(v) in u's column
// block and p(v)-p(u) in v's.
ff::Matrix rigidity_matrix(const FrameworkSpec& f);

// Same layout with the stored direction in place of the coordinate
// difference. Throws on a zero direction vector.
ff::Matrix limit_rigidity_matrix(const LimitFrameworkSpec& l);

}  // namespace rigidity
