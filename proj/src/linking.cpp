#include "linking.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace petfam {

namespace {

std::vector<int> faces_at_vertex(const Embedding& emb, int v) {
  std::vector<int> out;
  for (int w : emb.rs.rot[v]) {
    int f = emb.face_of(v, w);
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Boundary transitions of a face: (edge index, neighboring face),
// ascending by edge index, bridges skipped.
std::vector<std::pair<int, int>> face_exits(const Embedding& emb, int f) {
  std::vector<std::pair<int, int>> out;
  for (const Dart& d : emb.faces[f]) {
    if (emb.is_bridge(d.from, d.to)) continue;
    int idx = emb.graph.edge_index(Edge(d.from, d.to));
    out.push_back({idx, emb.face_of(d.to, d.from)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ArcRoute canonical_route(const Embedding& emb, int u, int v) {
  if (u == v) throw std::invalid_argument("arc endpoints coincide");
  auto src = faces_at_vertex(emb, u);
  auto dst = faces_at_vertex(emb, v);

  int F = (int)emb.faces.size();
  std::vector<int> dist(F, -1);
  std::vector<std::vector<int>> best_seq(F), best_faces(F);
  std::vector<int> layer;
  for (int s : src) {
    dist[s] = 0;
    best_faces[s] = {s};
    layer.push_back(s);
  }
  int d = 0;
  while (!layer.empty()) {
    std::vector<int> next;
    for (int f : layer)
      for (auto [e, g] : face_exits(emb, f)) {
        if (dist[g] != -1 && dist[g] <= d) continue;
        std::vector<int> seq = best_seq[f];
        seq.push_back(e);
        if (dist[g] == -1) {
          dist[g] = d + 1;
          next.push_back(g);
          best_seq[g] = seq;
          best_faces[g] = best_faces[f];
          best_faces[g].push_back(g);
        } else if (seq < best_seq[g]) {
          best_seq[g] = seq;
          best_faces[g] = best_faces[f];
          best_faces[g].push_back(g);
        }
      }
    layer = std::move(next);
    ++d;
  }

  int pick = -1;
  for (int f : dst) {
    if (dist[f] < 0) continue;
    if (pick == -1 || std::tuple(dist[f], best_seq[f], f) <
                          std::tuple(dist[pick], best_seq[pick], pick))
      pick = f;
  }
  if (pick == -1) throw std::logic_error("no route between vertex faces");
  ArcRoute r;
  r.from = u;
  r.to = v;
  r.faces = best_faces[pick];
  r.crossed = best_seq[pick];
  return r;
}

std::vector<ArcRoute> simple_routes(const Embedding& emb, int u, int v, int max_crossings) {
  auto src = faces_at_vertex(emb, u);
  auto dst = faces_at_vertex(emb, v);
  std::vector<ArcRoute> out;
  std::vector<int> faces, crossed;
  std::vector<bool> visited(emb.faces.size(), false);

  auto dfs = [&](auto&& self, int f) -> void {
    faces.push_back(f);
    visited[f] = true;
    if (std::find(dst.begin(), dst.end(), f) != dst.end()) {
      ArcRoute r;
      r.from = u;
      r.to = v;
      r.faces = faces;
      r.crossed = crossed;
      out.push_back(std::move(r));
    }
    if ((int)crossed.size() < max_crossings)
      for (auto [e, g] : face_exits(emb, f)) {
        if (visited[g]) continue;
        crossed.push_back(e);
        self(self, g);
        crossed.pop_back();
      }
    visited[f] = false;
    faces.pop_back();
  };
  for (int s : src) dfs(dfs, s);
  return out;
}

int route_crossing_parity(const ArcRoute& route, const EdgeSet& edges) {
  int p = 0;
  for (int e : route.crossed) p ^= edges.test(e) ? 1 : 0;
  return p;
}

namespace {

// A sortable boundary location: position along the face walk, with
// `sub` separating coincident crossing points.  When two arcs cross
// the same edge, the order of their crossing points along the edge is
// a free drawing choice, but it must appear reversed from the two
// incident faces; `sub` carries a per-strand offset signed by the
// direction the face walk traverses the edge, so both faces see one
// placement.  Ties at a shared endpoint corner live in a single face,
// where any fixed order is a valid drawing.
struct BoundaryPoint {
  int pos;
  int sub;
  friend auto operator<=>(const BoundaryPoint&, const BoundaryPoint&) = default;
};

struct FaceChord {
  int face;
  BoundaryPoint in, out;
};

int vertex_position(const Embedding& emb, int face, int x) {
  const auto& walk = emb.faces[face];
  for (size_t t = 0; t < walk.size(); ++t)
    if (walk[t].from == x) return 2 * (int)t;
  throw std::logic_error("vertex not on face");
}

// Position of the edge slot in the walk, plus the traversal sign:
// positive when the walk runs the edge from its low endpoint.
std::pair<int, int> edge_position(const Embedding& emb, int face, int edge_idx) {
  Edge e = emb.graph.edge_list()[edge_idx];
  const auto& walk = emb.faces[face];
  for (size_t t = 0; t < walk.size(); ++t) {
    if (walk[t].from == e.u && walk[t].to == e.v) return {2 * (int)t + 1, 1};
    if (walk[t].from == e.v && walk[t].to == e.u) return {2 * (int)t + 1, -1};
  }
  throw std::logic_error("edge not on face");
}

std::vector<FaceChord> route_chords(const Embedding& emb, const ArcRoute& r, int tag) {
  std::vector<FaceChord> out;
  int legs = (int)r.faces.size();
  auto strand = [&](int leg) { return tag * 64 + leg + 1; };
  for (int i = 0; i < legs; ++i) {
    int f = r.faces[i];
    BoundaryPoint in, outp;
    if (i == 0) {
      in = {vertex_position(emb, f, r.from), strand(i)};
    } else {
      auto [pos, dir] = edge_position(emb, f, r.crossed[i - 1]);
      in = {pos, dir * strand(i)};
    }
    if (i == legs - 1) {
      outp = {vertex_position(emb, f, r.to), strand(i)};
    } else {
      auto [pos, dir] = edge_position(emb, f, r.crossed[i]);
      outp = {pos, dir * strand(i)};
    }
    out.push_back(FaceChord{f, in, outp});
  }
  return out;
}

bool chords_interleave(const FaceChord& a, const FaceChord& b) {
  struct Lab {
    BoundaryPoint p;
    int who;
  };
  std::array<Lab, 4> pts{Lab{a.in, 0}, Lab{a.out, 0}, Lab{b.in, 1}, Lab{b.out, 1}};
  std::sort(pts.begin(), pts.end(), [](const Lab& x, const Lab& y) { return x.p < y.p; });
  return pts[0].who == pts[2].who && pts[1].who == pts[3].who && pts[0].who != pts[1].who;
}

}  // namespace

int mutual_crossing_parity(const Embedding& emb, const ArcRoute& a, const ArcRoute& b) {
  auto ca = route_chords(emb, a, 0);
  auto cb = route_chords(emb, b, 1);
  int p = 0;
  for (const auto& x : ca)
    for (const auto& y : cb)
      if (x.face == y.face && chords_interleave(x, y)) p ^= 1;
  return p;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int cycle_separation_parity(const Embedding& emb, const EdgeSet& cycle_edges,
                            uint16_t cycle_vertices, int x, int y) {
  if ((cycle_vertices >> x) & 1 || (cycle_vertices >> y) & 1)
    throw std::invalid_argument("query vertex lies on the cycle");
  auto edges = emb.graph.edge_list();
  Dsu dsu((int)emb.faces.size());
  for (size_t i = 0; i < edges.size(); ++i) {
    if (cycle_edges.test((int)i)) continue;
    dsu.unite(emb.face_of(edges[i].u, edges[i].v), emb.face_of(edges[i].v, edges[i].u));
  }
  int comps = 0;
  for (int f = 0; f < (int)emb.faces.size(); ++f)
    if (dsu.find(f) == f) ++comps;
  if (comps != 2) throw std::logic_error("cycle does not split the sphere in two");
  return dsu.find(emb.face_at_vertex(x)) != dsu.find(emb.face_at_vertex(y)) ? 1 : 0;
}

FlatScene build_scene(const SmallGraph& host, const std::vector<Edge>& fragments,
                      const RotationSystem& planar_rs) {
  FlatScene s;
  s.host = host;
  s.fragments = fragments;
  std::sort(s.fragments.begin(), s.fragments.end());
  if (s.fragments.size() > 8) throw std::invalid_argument("too many fragments");
  s.planar_part = host;
  for (const auto& e : s.fragments) {
    if (!host.has_edge(e.u, e.v)) throw std::invalid_argument("fragment is not a host edge");
    s.planar_part.remove_edge(e.u, e.v);
  }
  s.emb = build_embedding(s.planar_part, planar_rs);
  for (const auto& e : s.fragments) s.routes.push_back(canonical_route(s.emb, e.u, e.v));

  auto host_edges = host.edge_list();
  std::vector<int> frag_of_host(host_edges.size(), -1);
  std::vector<int> planar_of_host(host_edges.size(), -1);
  for (size_t i = 0; i < host_edges.size(); ++i) {
    auto it = std::find(s.fragments.begin(), s.fragments.end(), host_edges[i]);
    if (it != s.fragments.end())
      frag_of_host[i] = (int)(it - s.fragments.begin());
    else
      planar_of_host[i] = s.planar_part.edge_index(host_edges[i]);
  }

  for (const auto& c : all_cycles(host)) {
    SceneCycle sc;
    sc.host_edges = c.edges;
    sc.vertex_mask = c.vertex_mask;
    for (size_t i = 0; i < host_edges.size(); ++i) {
      if (!c.edges.test((int)i)) continue;
      if (frag_of_host[i] >= 0)
        sc.frag_mask |= uint8_t(1u << frag_of_host[i]);
      else
        sc.planar_edges.set(planar_of_host[i]);
    }
    s.cycles.push_back(sc);
  }

  for (size_t i = 0; i < s.cycles.size(); ++i)
    for (size_t j = i + 1; j < s.cycles.size(); ++j) {
      if (s.cycles[i].vertex_mask & s.cycles[j].vertex_mask) continue;
      // A pair with no fragment on either side lies flat on the
      // sphere, where disjoint cycles never cross; skip those.
      if (s.cycles[i].frag_mask == 0 && s.cycles[j].frag_mask == 0) continue;
      s.disjoint_pairs.push_back({(int)i, (int)j});
    }

  int k = s.fragment_count();
  s.cross_parity.assign(k, std::vector<uint8_t>(s.cycles.size(), 0));
  for (int f = 0; f < k; ++f)
    for (size_t c = 0; c < s.cycles.size(); ++c)
      s.cross_parity[f][c] =
          (uint8_t)route_crossing_parity(s.routes[f], s.cycles[c].planar_edges);
  for (int f = 0; f < k; ++f)
    for (int g = f + 1; g < k; ++g)
      s.arc_cross[f][g] = s.arc_cross[g][f] =
          (uint8_t)mutual_crossing_parity(s.emb, s.routes[f], s.routes[g]);
  return s;
}

std::vector<TangleConfig> all_tangle_configs(const FlatScene& scene) {
  int k = scene.fragment_count();
  std::vector<TangleConfig> out;
  for (uint32_t side = 0; side < (1u << k); ++side) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (((side >> i) & 1) == ((side >> j) & 1)) pairs.push_back({i, j});
    long combos = 1L << (2 * pairs.size());
    for (long combo = 0; combo < combos; ++combo) {
      TangleConfig cfg;
      cfg.below_mask = (uint8_t)side;
      for (size_t p = 0; p < pairs.size(); ++p) {
        auto [i, j] = pairs[p];
        cfg.m[i][j] = (combo >> (2 * p)) & 1;
        cfg.m[j][i] = (combo >> (2 * p + 1)) & 1;
      }
      out.push_back(cfg);
    }
  }
  return out;
}

long expected_tangle_config_count(int k) {
  long total = 0;
  for (uint32_t side = 0; side < (1u << k); ++side) {
    int same = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (((side >> i) & 1) == ((side >> j) & 1)) ++same;
    total += 1L << (2 * same);
  }
  return total;
}

bool config_is_coherent(const FlatScene& scene, const TangleConfig& cfg) {
  int k = scene.fragment_count();
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (cfg.same_side(i, j) &&
          ((cfg.m[i][j] ^ cfg.m[j][i]) & 1) != (scene.arc_cross[i][j] & 1))
        return false;
  return true;
}

int linking_parity(const FlatScene& scene, const TangleConfig& cfg, int c1, int c2) {
  const SceneCycle& a = scene.cycles[c1];
  const SceneCycle& b = scene.cycles[c2];
  int L = 0;
  for (int f = 0; f < scene.fragment_count(); ++f) {
    bool in1 = (a.frag_mask >> f) & 1;
    bool in2 = (b.frag_mask >> f) & 1;
    if (in1 && !cfg.below(f)) L ^= scene.cross_parity[f][c2];
    if (in2 && cfg.below(f)) L ^= scene.cross_parity[f][c1];
  }
  for (int f = 0; f < scene.fragment_count(); ++f) {
    if (!((a.frag_mask >> f) & 1)) continue;
    for (int g = 0; g < scene.fragment_count(); ++g) {
      if (!((b.frag_mask >> g) & 1)) continue;
      if (!cfg.below(f) && cfg.below(g)) L ^= scene.arc_cross[f][g];
      if (cfg.same_side(f, g)) L ^= cfg.m[f][g];
    }
  }
  return L & 1;
}

std::optional<OddPair> find_odd_pair(const FlatScene& scene, const TangleConfig& cfg) {
  for (auto [i, j] : scene.disjoint_pairs) {
    if (linking_parity(scene, cfg, i, j)) return OddPair{i, j, false};
    if (linking_parity(scene, cfg, j, i)) return OddPair{i, j, true};
  }
  return std::nullopt;
}

TangleConfig transport_tangle(const FlatScene& scene, const TangleConfig& cfg, int t,
                              const ArcRoute& old_route, const ArcRoute& new_route) {
  TangleConfig out = cfg;
  for (int s = 0; s < scene.fragment_count(); ++s) {
    if (s == t || !cfg.same_side(t, s)) continue;
    int delta = mutual_crossing_parity(scene.emb, old_route, scene.routes[s]) ^
                mutual_crossing_parity(scene.emb, new_route, scene.routes[s]);
    if (!cfg.below(t))
      out.m[t][s] ^= (uint8_t)delta;
    else
      out.m[s][t] ^= (uint8_t)delta;
  }
  return out;
}

FlatScene reroute_fragment(const FlatScene& scene, int t, const ArcRoute& new_route) {
  FlatScene s = scene;
  s.routes[t] = new_route;
  for (size_t c = 0; c < s.cycles.size(); ++c)
    s.cross_parity[t][c] =
        (uint8_t)route_crossing_parity(s.routes[t], s.cycles[c].planar_edges);
  for (int g = 0; g < s.fragment_count(); ++g) {
    if (g == t) continue;
    s.arc_cross[t][g] = s.arc_cross[g][t] =
        (uint8_t)mutual_crossing_parity(s.emb, s.routes[t], s.routes[g]);
  }
  return s;
}

}  // namespace petfam
