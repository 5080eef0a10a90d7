#pragma once

#include "smallgraph.hpp"

#include <array>

namespace petfam {

struct Cycle {
  EdgeSet edges;           // indices into host.edge_list()
  uint16_t vertex_mask = 0;
  int length = 0;

  bool vertex_disjoint(const Cycle& o) const { return (vertex_mask & o.vertex_mask) == 0; }
};

// Every simple cycle, by exhaustive scan of edge subsets (hosts here
// have at most ~20 edges).  Order is ascending by edge bitmask, so the
// result is deterministic.
std::vector<Cycle> all_cycles(const SmallGraph& g);

std::vector<std::array<int, 3>> all_triangles(const SmallGraph& g);

long count_vertex_disjoint_pairs(const std::vector<Cycle>& cycles);

}  // namespace petfam
