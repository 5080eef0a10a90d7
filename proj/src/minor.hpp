#pragma once

#include "smallgraph.hpp"

namespace petfam {

// Merge v into u along the edge (u,v): v's other neighbors become
// neighbors of u, v disappears, indices above v shift down.  Parallel
// edges collapse, so the result is again simple.
SmallGraph contract_edge(const SmallGraph& g, int u, int v);

// Repeatedly delete vertices of degree <= 1 and smooth vertices of
// degree 2 (replacing the two incident edges by one, merging it with
// an existing edge if present).  Neither operation can create or
// destroy a minor with minimum degree 3.
SmallGraph simplify_for_minors(const SmallGraph& g);

bool has_k5_subgraph(const SmallGraph& g);
bool has_k33_subgraph(const SmallGraph& g);

// True when the graph has a K5 or K3,3 minor.  Recursive: a minor
// model either needs no contractions (subgraph case) or contracts some
// edge, so branching over all single contractions is complete.
// Results are memoized on canonical form.
bool has_forbidden_minor(const SmallGraph& g);

bool is_planar(const SmallGraph& g);

// True when deleting some single vertex leaves a planar graph.
bool is_apex(const SmallGraph& g);

}  // namespace petfam
