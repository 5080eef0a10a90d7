#pragma once

#include "smallgraph.hpp"

namespace petfam {

// A maximal planar subgraph of G keeps every vertex, so it is G minus
// a set R of edges that is minimal among planar-making deletions:
// putting any removed edge back breaks planarity precisely because no
// proper subset of R suffices.  Enumerating minimal planar-making
// deletion sets therefore enumerates the maximal planar subgraphs.
struct MpsRecord {
  EdgeSet removal;  // orbit representative, lexicographically least
  long orbit_size = 0;
};

struct MpsEnumeration {
  std::vector<EdgeSet> raw;        // every minimal deletion set, ascending
  std::vector<MpsRecord> records;  // orbit classes under the automorphism group
};

MpsEnumeration enumerate_mps(const SmallGraph& g);

SmallGraph remove_edge_set(const SmallGraph& g, const EdgeSet& removal);

bool edges_form_matching(const SmallGraph& g, const EdgeSet& s);
bool edges_form_path(const SmallGraph& g, const EdgeSet& s);
bool edges_form_star(const SmallGraph& g, const EdgeSet& s);

// Short structural tag used in reports: "edge", "matching",
// "perfect-matching", "path", "star", or "other".
std::string removal_shape_name(const SmallGraph& g, const EdgeSet& s);

// Transfer of maximal planar subgraphs along one triangle-star
// exchange: every MPS of h := delta_to_wye(g, triangle) that contains
// the whole star must be a subgraph of the exchanged image of some
// MPS of g that contains the triangle.
struct TransferCheck {
  long eligible = 0;     // MPS of h containing the star
  long transferred = 0;  // those lying inside an exchanged g-MPS
  bool passed = false;   // eligible > 0 and transferred == eligible
};

TransferCheck verify_mps_transfer(const SmallGraph& g, const std::array<int, 3>& triangle);

}  // namespace petfam
