#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace petfam {

inline constexpr int kMaxVertices = 16;

struct Edge {
  int u = 0;
  int v = 0;  // normalized so that u < v
  Edge() = default;
  Edge(int a, int b);
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on at most 16 vertices.  Row v of adj is the
// neighbor bitmask of v, so edge tests and degree counts are single
// word operations.  Vertex labels are optional display names; indices
// are the identity of record.
struct SmallGraph {
  int n = 0;
  std::array<uint16_t, kMaxVertices> adj{};
  std::vector<std::string> labels;  // empty, or size n

  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  int degree(int v) const;
  int edge_count() const;
  std::vector<Edge> edge_list() const;      // lexicographic by (u,v)
  int edge_index(const Edge& e) const;      // index into edge_list(), -1 if absent
  bool connected() const;
  bool two_connected() const;
  std::string vertex_name(int v) const;     // label if present, else decimal index

  friend bool operator==(const SmallGraph& a, const SmallGraph& b) {
    return a.n == b.n && a.adj == b.adj;
  }
};

SmallGraph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Text format: first line "n m", then m lines "u v" in lexicographic
// order.  Lines of the form "label <i> <name>" may follow the edges.
SmallGraph parse_graph_text(const std::string& text);
std::string format_graph_text(const SmallGraph& g, bool with_labels = false);

// Permutations act as relabelings: vertex v of the input becomes p[v].
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
Permutation compose(const Permutation& outer, const Permutation& inner);  // outer after inner
Permutation inverse(const Permutation& p);
SmallGraph apply_permutation(const SmallGraph& g, const Permutation& p);

// All adjacency preserving bijections, in lexicographic order of the
// permutation vector.  Identity is always first.
std::vector<Permutation> automorphism_group(const SmallGraph& g);

// Canonical form: the lexicographically smallest relabeled adjacency
// matrix, encoded as one row bitmask per vertex.  Equal canonical
// forms mean isomorphic graphs.
std::vector<uint16_t> canonical_form(const SmallGraph& g);
bool isomorphic(const SmallGraph& a, const SmallGraph& b);

// Exchange a triangle for a degree-3 star on a fresh vertex (placed at
// index n), or collapse a degree-3 vertex back to a triangle.  The
// collapse merges any edge that already exists, keeping the graph
// simple.
SmallGraph delta_to_wye(const SmallGraph& g, const std::array<int, 3>& triangle,
                        const std::string& new_label = "");
SmallGraph wye_to_delta(const SmallGraph& g, int center);

// Bit-vector over a host graph's canonical edge enumeration.  Hosts
// here never exceed 120 edges.
struct EdgeSet {
  uint64_t lo = 0;
  uint64_t hi = 0;

  bool test(int i) const { return ((i < 64 ? lo >> i : hi >> (i - 64)) & 1) != 0; }
  void set(int i) { (i < 64 ? lo : hi) |= uint64_t{1} << (i & 63); }
  void reset(int i) { (i < 64 ? lo : hi) &= ~(uint64_t{1} << (i & 63)); }
  int count() const;
  bool empty() const { return lo == 0 && hi == 0; }
  bool subset_of(const EdgeSet& o) const {
    return (lo & ~o.lo) == 0 && (hi & ~o.hi) == 0;
  }
  friend EdgeSet operator&(const EdgeSet& a, const EdgeSet& b) {
    return EdgeSet{a.lo & b.lo, a.hi & b.hi};
  }
  friend EdgeSet operator|(const EdgeSet& a, const EdgeSet& b) {
    return EdgeSet{a.lo | b.lo, a.hi | b.hi};
  }
  friend EdgeSet operator^(const EdgeSet& a, const EdgeSet& b) {
    return EdgeSet{a.lo ^ b.lo, a.hi ^ b.hi};
  }
  friend auto operator<=>(const EdgeSet&, const EdgeSet&) = default;
};

EdgeSet edge_set_of(const SmallGraph& host, const std::vector<Edge>& edges);
std::vector<Edge> edges_of_set(const SmallGraph& host, const EdgeSet& s);

// Image of an edge set under a vertex permutation; every image edge
// must again be an edge of the host.
EdgeSet permute_edge_set(const SmallGraph& host, const EdgeSet& s, const Permutation& p);

struct EdgeSetOrbit {
  EdgeSet representative;  // lexicographically least member
  long size = 0;
};

// Partition edge sets into orbits under a permutation group acting on
// the host.  Input sets need not be distinct; duplicates are ignored.
std::vector<EdgeSetOrbit> orbit_dedup(const SmallGraph& host,
                                      const std::vector<EdgeSet>& sets,
                                      const std::vector<Permutation>& group);

}  // namespace petfam
