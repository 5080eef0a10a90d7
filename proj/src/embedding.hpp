#pragma once

#include "smallgraph.hpp"

#include <functional>

namespace petfam {

// Combinatorial embedding data.  rot[v] lists the neighbors of v in
// cyclic order; a rotation system describes an embedding in an
// orientable surface, and it lands on the sphere exactly when the face
// count satisfies Euler's formula.
struct RotationSystem {
  std::vector<std::vector<int>> rot;

  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
};

struct Dart {
  int from = -1;
  int to = -1;
  friend bool operator==(const Dart&, const Dart&) = default;
};

// Face walks of a rotation system.  Each directed edge lies on exactly
// one face; the walk successor of (u,v) is (v,w) with w the cyclic
// successor of u in rot[v].
std::vector<std::vector<Dart>> trace_faces(const SmallGraph& g, const RotationSystem& rs);

bool rotation_system_is_planar(const SmallGraph& g, const RotationSystem& rs);

// Visit every rotation system of g that embeds it in the sphere.  The
// first neighbor of each vertex is pinned, so each cyclic order is
// produced exactly once; mirror images appear as separate systems.
// Throws if the raw search space exceeds `guard` leaves.
void for_each_planar_rotation_system(const SmallGraph& g,
                                     const std::function<void(const RotationSystem&)>& visit,
                                     long guard = 60'000'000);

long count_planar_rotation_systems(const SmallGraph& g);

// Serialized form of a rotation system, minimized over the given
// vertex permutations and over reflection.  Two systems get the same
// key iff one can be turned into the other by a permutation in the
// group, possibly composed with a mirror flip.
std::vector<int> embedding_key(const SmallGraph& g, const RotationSystem& rs,
                               const std::vector<Permutation>& group);

struct EmbeddingClass {
  RotationSystem representative;  // member with the least self-serialization
  long raw_count = 0;             // rotation systems in the class
};

// One representative per equivalence class of sphere embeddings under
// the given permutation group and reflection.  Deterministic.
std::vector<EmbeddingClass> embedding_classes(const SmallGraph& g,
                                              const std::vector<Permutation>& group);

// A traced embedding with constant-time dart lookups, the working
// object for routing and separation questions.
struct Embedding {
  SmallGraph graph;
  RotationSystem rs;
  std::vector<std::vector<Dart>> faces;

  int face_of(int u, int v) const { return face_of_dart_[dart_id(u, v)]; }
  int walk_index_of(int u, int v) const { return walk_index_of_dart_[dart_id(u, v)]; }
  int face_at_vertex(int v) const;  // some face incident to v
  bool is_bridge(int u, int v) const { return face_of(u, v) == face_of(v, u); }

  static int dart_id(int u, int v) { return u * kMaxVertices + v; }

  std::vector<int> face_of_dart_;
  std::vector<int> walk_index_of_dart_;
};

Embedding build_embedding(const SmallGraph& g, const RotationSystem& rs);

}  // namespace petfam
