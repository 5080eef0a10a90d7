#pragma once

#include "linking.hpp"

#include <set>

namespace petfam {

// Parities forced between two fragments when both are drawn on the
// same side with no mutual tangle: for each pair of vertex-disjoint
// cycles running through exactly one fragment each, the linking parity
// collapses to the crossing parity of the first fragment's route with
// the second cycle's embedded part.  If both parities occur, every
// same-side drawing of the two fragments links some cycle pair.
std::set<int> pairwise_base_parities(const FlatScene& scene, int fe, int ff);

// A cycle through both fragments (and nothing else) together with a
// disjoint embedded cycle that separates the fragments' endpoints.
// When the two fragments sit on opposite sides, such a pair is linked
// no matter how the arcs are drawn.
bool anti_conflict_witness(const FlatScene& scene, int fe, int ff);

struct SignedEdge {
  int a = -1, b = -1;     // fragment indices, a < b
  bool negative = false;  // true: same side forbidden; false: opposite sides forbidden

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

// Signed multigraph on the fragments.  A pair can carry both kinds of
// edge at once; edges are listed by (a, b), negative first.
struct ConflictGraph {
  int fragment_count = 0;
  std::vector<SignedEdge> edges;

  friend bool operator==(const ConflictGraph&, const ConflictGraph&) = default;
};

ConflictGraph conflict_graph(const FlatScene& scene);

// Two-colorability respecting the signs: negative edges demand
// different sides, positive edges the same side.
struct BalanceResult {
  bool balanced = false;
  std::vector<int> side;       // one valid assignment when balanced
  std::vector<int> odd_cycle;  // edge indices of a closed walk with an odd
                               // number of negative edges, otherwise
};

BalanceResult check_balance(const ConflictGraph& g);

// Independent re-validation of a balance result.
bool balance_certificate_ok(const ConflictGraph& g, const BalanceResult& r);

}  // namespace petfam
