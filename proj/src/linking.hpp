#pragma once

#include "cycles.hpp"
#include "embedding.hpp"

#include <array>
#include <optional>

namespace petfam {

// An arc through the faces of an embedding from one vertex to another,
// crossing interior edges transversally.  crossed[i] is the edge index
// (into the embedded graph's edge_list) separating faces[i] and
// faces[i+1].
struct ArcRoute {
  int from = -1;
  int to = -1;
  std::vector<int> faces;    // one more entry than crossed
  std::vector<int> crossed;

  friend bool operator==(const ArcRoute&, const ArcRoute&) = default;
};

// Fewest crossings, then lexicographically least crossed-edge
// sequence, then least final face.  Deterministic.
ArcRoute canonical_route(const Embedding& emb, int u, int v);

// Routes whose face sequence repeats no face, with at most
// max_crossings crossings.  Superset of the canonical route; used to
// exercise invariance under rerouting.
std::vector<ArcRoute> simple_routes(const Embedding& emb, int u, int v, int max_crossings);

// Parity of crossings between the route and a set of embedded edges.
int route_crossing_parity(const ArcRoute& route, const EdgeSet& edges);

// Parity of crossings forced between two arcs: within each face both
// visit, their chords cross iff the endpoints interleave along the
// face boundary.  Coincident endpoints (same crossed edge, same face)
// are ordered deterministically; the parity does not depend on that
// choice.
int mutual_crossing_parity(const Embedding& emb, const ArcRoute& a, const ArcRoute& b);

// Whether the embedded cycle separates vertices x and y on the sphere.
// x and y must not lie on the cycle.
int cycle_separation_parity(const Embedding& emb, const EdgeSet& cycle_edges,
                            uint16_t cycle_vertices, int x, int y);

// ---------------------------------------------------------------------------
// Scenes: a nonplanar host graph split into an embedded planar part
// plus fragment edges drawn as arcs above or below the sphere.

struct SceneCycle {
  EdgeSet host_edges;      // indices into host.edge_list()
  uint16_t vertex_mask = 0;
  uint8_t frag_mask = 0;   // which fragments the cycle runs through
  EdgeSet planar_edges;    // the rest, reindexed into planar_part.edge_list()
};

struct FlatScene {
  SmallGraph host;
  SmallGraph planar_part;
  std::vector<Edge> fragments;     // ascending; at most 8
  Embedding emb;
  std::vector<ArcRoute> routes;    // canonical route per fragment

  std::vector<SceneCycle> cycles;                  // every cycle of the host
  std::vector<std::pair<int, int>> disjoint_pairs; // i < j, vertex-disjoint

  // cross_parity[f][c]: canonical route of fragment f vs the planar
  // edges of cycle c.  arc_cross[f][g]: between the two routes.
  std::vector<std::vector<uint8_t>> cross_parity;
  std::array<std::array<uint8_t, 8>, 8> arc_cross{};

  int fragment_count() const { return (int)fragments.size(); }
};

FlatScene build_scene(const SmallGraph& host, const std::vector<Edge>& fragments,
                      const RotationSystem& planar_rs);

// A side choice per fragment plus, for every ordered pair of
// same-side fragments, the parity of crossings where the first arc
// passes outside the second.  All four parity combinations per
// unordered pair are admitted; a configuration is "coherent" when the
// two ordered parities add up to the forced crossing parity of the
// canonical routes.
struct TangleConfig {
  uint8_t below_mask = 0;                   // bit f set: fragment f below
  std::array<std::array<uint8_t, 8>, 8> m{};

  bool below(int f) const { return (below_mask >> f) & 1; }
  bool same_side(int a, int b) const { return below(a) == below(b); }
};

std::vector<TangleConfig> all_tangle_configs(const FlatScene& scene);

long expected_tangle_config_count(int fragment_count);

bool config_is_coherent(const FlatScene& scene, const TangleConfig& cfg);

// Linking parity of the ordered pair of vertex-disjoint cycles: the
// parity of crossings at which the first cycle passes outside the
// second, in the diagram determined by the scene and configuration.
int linking_parity(const FlatScene& scene, const TangleConfig& cfg, int c1, int c2);

struct OddPair {
  int c1 = -1, c2 = -1;  // indices into scene.cycles, c1 < c2
  bool reversed = false; // parity odd for (c2,c1) but not (c1,c2)
};

// First vertex-disjoint cycle pair (in cycle enumeration order) whose
// linking parity is odd in either orientation.
std::optional<OddPair> find_odd_pair(const FlatScene& scene, const TangleConfig& cfg);

// Replace fragment t's route and adjust the tangle parities so every
// linking parity is preserved.  Returns the adjusted configuration
// for the scene with the new route installed.
TangleConfig transport_tangle(const FlatScene& scene, const TangleConfig& cfg, int t,
                              const ArcRoute& old_route, const ArcRoute& new_route);

// Scene copy with one fragment rerouted (parity tables rebuilt).
FlatScene reroute_fragment(const FlatScene& scene, int t, const ArcRoute& new_route);

}  // namespace petfam
