#include "cycles.hpp"

#include <bit>
#include <stdexcept>

namespace petfam {

std::vector<Cycle> all_cycles(const SmallGraph& g) {
  auto edges = g.edge_list();
  int m = (int)edges.size();
  if (m > 20) throw std::invalid_argument("too many edges for subset scan");
  std::vector<Cycle> out;
  for (uint32_t mask = 1; mask < (uint32_t(1) << m); ++mask) {
    // A subset is a simple cycle iff every touched vertex has degree 2
    // in it and its edges form one connected piece.
    std::array<int, kMaxVertices> deg{};
    uint16_t verts = 0;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      if (!((mask >> i) & 1)) continue;
      for (int x : {edges[i].u, edges[i].v}) {
        if (++deg[x] > 2) ok = false;
        verts |= uint16_t(1u << x);
      }
    }
    if (!ok) continue;
    for (int v = 0; v < g.n && ok; ++v)
      if ((verts >> v) & 1 && deg[v] != 2) ok = false;
    if (!ok) continue;
    // Connectivity among the touched vertices using only subset edges.
    int start = std::countr_zero(verts);
    uint16_t seen = uint16_t(1u << start);
    bool grew = true;
    while (grew) {
      grew = false;
      for (int i = 0; i < m; ++i) {
        if (!((mask >> i) & 1)) continue;
        uint16_t eu = uint16_t(1u << edges[i].u), ev = uint16_t(1u << edges[i].v);
        if ((seen & eu) && !(seen & ev)) { seen |= ev; grew = true; }
        if ((seen & ev) && !(seen & eu)) { seen |= eu; grew = true; }
      }
    }
    if (seen != verts) continue;
    Cycle c;
    c.edges.lo = mask;
    c.vertex_mask = verts;
    c.length = std::popcount(mask);
    out.push_back(c);
  }
  return out;
}

std::vector<std::array<int, 3>> all_triangles(const SmallGraph& g) {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b) {
      if (!g.has_edge(a, b)) continue;
      for (int c = b + 1; c < g.n; ++c)
        if (g.has_edge(a, c) && g.has_edge(b, c)) out.push_back({a, b, c});
    }
  return out;
}

long count_vertex_disjoint_pairs(const std::vector<Cycle>& cycles) {
  long count = 0;
  for (size_t i = 0; i < cycles.size(); ++i)
    for (size_t j = i + 1; j < cycles.size(); ++j)
      if (cycles[i].vertex_disjoint(cycles[j])) ++count;
  return count;
}

}  // namespace petfam
