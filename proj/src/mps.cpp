#include "mps.hpp"

#include "minor.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace petfam {

SmallGraph remove_edge_set(const SmallGraph& g, const EdgeSet& removal) {
  SmallGraph h = g;
  auto edges = g.edge_list();
  for (size_t i = 0; i < edges.size(); ++i)
    if (removal.test((int)i)) h.remove_edge(edges[i].u, edges[i].v);
  return h;
}

MpsEnumeration enumerate_mps(const SmallGraph& g) {
  int m = g.edge_count();
  if (m > 30) throw std::invalid_argument("edge count too large for subset search");
  if (is_planar(g)) throw std::invalid_argument("graph is already planar");

  std::vector<uint32_t> found;  // minimal planar-making masks
  for (int k = 1; k <= m; ++k) {
    // Gosper's hack over k-subsets of m bits.
    uint32_t mask = (uint32_t(1) << k) - 1;
    uint32_t end = uint32_t(1) << m;
    bool any_unmarked = false;
    while (mask < end) {
      bool marked = false;
      for (uint32_t f : found)
        if ((f & mask) == f) { marked = true; break; }
      if (!marked) {
        any_unmarked = true;
        EdgeSet r;
        r.lo = mask;
        if (is_planar(remove_edge_set(g, r))) found.push_back(mask);
      }
      uint32_t c = mask & -mask;
      uint32_t rr = mask + c;
      mask = (((rr ^ mask) >> 2) / c) | rr;
    }
    // Every superset of a marked candidate is itself marked, so once a
    // whole level is marked no larger minimal set can exist.
    if (!any_unmarked) break;
  }

  MpsEnumeration out;
  for (uint32_t f : found) {
    EdgeSet r;
    r.lo = f;
    out.raw.push_back(r);
  }
  std::sort(out.raw.begin(), out.raw.end());
  auto orbits = orbit_dedup(g, out.raw, automorphism_group(g));
  for (const auto& orb : orbits)
    out.records.push_back(MpsRecord{orb.representative, orb.size});
  return out;
}

namespace {

std::vector<Edge> set_edges(const SmallGraph& g, const EdgeSet& s) {
  return edges_of_set(g, s);
}

}  // namespace

bool edges_form_matching(const SmallGraph& g, const EdgeSet& s) {
  auto edges = set_edges(g, s);
  uint16_t seen = 0;
  for (const auto& e : edges) {
    uint16_t mask = uint16_t((1u << e.u) | (1u << e.v));
    if (seen & mask) return false;
    seen |= mask;
  }
  return !edges.empty();
}

bool edges_form_path(const SmallGraph& g, const EdgeSet& s) {
  auto edges = set_edges(g, s);
  if (edges.empty()) return false;
  std::array<int, kMaxVertices> deg{};
  uint16_t verts = 0;
  for (const auto& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
    verts |= uint16_t((1u << e.u) | (1u << e.v));
  }
  int ones = 0;
  for (int v = 0; v < g.n; ++v) {
    if (!((verts >> v) & 1)) continue;
    if (deg[v] > 2) return false;
    if (deg[v] == 1) ++ones;
  }
  if (ones != 2) return false;
  // connected and acyclic <=> tree on the touched vertices
  return std::popcount(verts) == (int)edges.size() + 1 && [&] {
    int start = std::countr_zero(verts);
    uint16_t seen = uint16_t(1u << start);
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& e : edges) {
        uint16_t a = uint16_t(1u << e.u), b = uint16_t(1u << e.v);
        if ((seen & a) && !(seen & b)) { seen |= b; grew = true; }
        if ((seen & b) && !(seen & a)) { seen |= a; grew = true; }
      }
    }
    return seen == verts;
  }();
}

bool edges_form_star(const SmallGraph& g, const EdgeSet& s) {
  auto edges = set_edges(g, s);
  if (edges.size() < 2) return false;
  uint16_t common = uint16_t((1u << edges[0].u) | (1u << edges[0].v));
  for (const auto& e : edges) common &= uint16_t((1u << e.u) | (1u << e.v));
  return common != 0;
}

std::string removal_shape_name(const SmallGraph& g, const EdgeSet& s) {
  int k = s.count();
  if (k == 0) return "empty";
  if (k == 1) return "edge";
  if (edges_form_matching(g, s)) {
    auto edges = set_edges(g, s);
    uint16_t verts = 0;
    for (const auto& e : edges) verts |= uint16_t((1u << e.u) | (1u << e.v));
    return std::popcount(verts) == g.n ? "perfect-matching" : "matching";
  }
  if (edges_form_path(g, s)) return "path";
  if (edges_form_star(g, s)) return "star";
  return "other";
}

TransferCheck verify_mps_transfer(const SmallGraph& g, const std::array<int, 3>& triangle) {
  SmallGraph h = delta_to_wye(g, triangle);
  auto mps_g = enumerate_mps(g);
  auto mps_h = enumerate_mps(h);

  auto tri_set = edge_set_of(g, {Edge(triangle[0], triangle[1]),
                                 Edge(triangle[0], triangle[2]),
                                 Edge(triangle[1], triangle[2])});
  int w = g.n;  // the star vertex added by the exchange
  auto star_set = edge_set_of(h, {Edge(triangle[0], w), Edge(triangle[1], w),
                                  Edge(triangle[2], w)});

  // Images of the MPS of g that keep the triangle, written as removal
  // sets of h.  The exchange leaves the removed edges untouched, so
  // the image is the same edge pairs reindexed in h.  Images need not
  // themselves be planar (the triangle can be separating in the MPS),
  // which is why the containment below can be strict.
  std::vector<EdgeSet> images;
  for (const auto& removal : mps_g.raw) {
    if (!((removal & tri_set) == EdgeSet{})) continue;
    images.push_back(edge_set_of(h, edges_of_set(g, removal)));
  }

  TransferCheck out;
  for (const auto& removal : mps_h.raw) {
    if (!((removal & star_set) == EdgeSet{})) continue;  // MPS must contain the star
    ++out.eligible;
    for (const auto& img : images) {
      // img ⊆ removal means the h-MPS sits inside the exchanged g-MPS.
      if (img.subset_of(removal)) {
        ++out.transferred;
        break;
      }
    }
  }
  out.passed = out.eligible > 0 && out.transferred == out.eligible;
  return out;
}

}  // namespace petfam
