#include "smallgraph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace petfam {

Edge::Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) throw std::invalid_argument("loop edge");
}

void SmallGraph::add_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= n || v >= n)
    throw std::invalid_argument("bad edge endpoints");
  adj[u] |= uint16_t(1u << v);
  adj[v] |= uint16_t(1u << u);
}

void SmallGraph::remove_edge(int u, int v) {
  adj[u] &= uint16_t(~(1u << v));
  adj[v] &= uint16_t(~(1u << u));
}

int SmallGraph::degree(int v) const { return std::popcount(adj[v]); }

int SmallGraph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<Edge> SmallGraph::edge_list() const {
  std::vector<Edge> out;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (has_edge(u, v)) out.push_back(Edge(u, v));
  return out;
}

int SmallGraph::edge_index(const Edge& e) const {
  int idx = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (has_edge(u, v)) {
        if (u == e.u && v == e.v) return idx;
        ++idx;
      }
  return -1;
}

bool SmallGraph::connected() const {
  if (n == 0) return true;
  uint32_t seen = 1;
  uint32_t frontier = 1;
  while (frontier) {
    uint32_t next = 0;
    for (int v = 0; v < n; ++v)
      if ((frontier >> v) & 1) next |= adj[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (uint32_t(1) << n) - 1;
}

bool SmallGraph::two_connected() const {
  if (n < 3) return false;
  if (!connected()) return false;
  // n <= 16, so deleting each vertex in turn is cheap.
  for (int cut = 0; cut < n; ++cut) {
    int start = cut == 0 ? 1 : 0;
    uint32_t seen = uint32_t(1) << start;
    uint32_t frontier = seen;
    uint32_t mask = ((uint32_t(1) << n) - 1) & ~(uint32_t(1) << cut);
    while (frontier) {
      uint32_t next = 0;
      for (int v = 0; v < n; ++v)
        if ((frontier >> v) & 1) next |= adj[v];
      next &= mask;
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen != mask) return false;
  }
  return true;
}

std::string SmallGraph::vertex_name(int v) const {
  if (v >= 0 && v < (int)labels.size() && !labels[v].empty()) return labels[v];
  return std::to_string(v);
}

SmallGraph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("vertex count out of range");
  SmallGraph g;
  g.n = n;
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

SmallGraph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  int n = -1, m = -1;
  if (!(in >> n >> m)) throw std::invalid_argument("expected 'n m' header");
  if (n < 0 || n > kMaxVertices || m < 0) throw std::invalid_argument("bad header values");
  SmallGraph g;
  g.n = n;
  for (int i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v)) throw std::invalid_argument("truncated edge list");
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw std::invalid_argument("bad edge endpoints");
    if (g.has_edge(u, v)) throw std::invalid_argument("duplicate edge");
    g.add_edge(u, v);
  }
  std::string word;
  while (in >> word) {
    if (word != "label") throw std::invalid_argument("unexpected trailing token: " + word);
    int idx;
    std::string name;
    if (!(in >> idx >> name) || idx < 0 || idx >= n)
      throw std::invalid_argument("bad label line");
    if (g.labels.empty()) g.labels.resize(n);
    g.labels[idx] = name;
  }
  return g;
}

std::string format_graph_text(const SmallGraph& g, bool with_labels) {
  std::ostringstream out;
  auto edges = g.edge_list();
  out << g.n << ' ' << edges.size() << '\n';
  for (const auto& e : edges) out << e.u << ' ' << e.v << '\n';
  if (with_labels && !g.labels.empty())
    for (int v = 0; v < g.n; ++v)
      if (!g.labels[v].empty()) out << "label " << v << ' ' << g.labels[v] << '\n';
  return out.str();
}

Permutation identity_permutation(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation r(inner.size());
  for (size_t i = 0; i < inner.size(); ++i) r[i] = outer[inner[i]];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = i;
  return r;
}

SmallGraph apply_permutation(const SmallGraph& g, const Permutation& p) {
  SmallGraph h;
  h.n = g.n;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.has_edge(u, v)) h.add_edge(p[u], p[v]);
  if (!g.labels.empty()) {
    h.labels.resize(g.n);
    for (int v = 0; v < g.n; ++v) h.labels[p[v]] = g.labels[v];
  }
  return h;
}

namespace {

// Extend a partial relabeling position by position.  At each step the
// candidate vertex must reproduce the target's adjacency into the
// fixed prefix.  Used both for automorphisms (target == source) and
// for canonical form search.
void search_automorphisms(const SmallGraph& g, Permutation& img, std::vector<bool>& used,
                          int pos, std::vector<Permutation>& out) {
  int n = g.n;
  if (pos == n) {
    out.push_back(img);
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (used[v]) continue;
    if (g.degree(v) != g.degree(pos)) continue;
    bool ok = true;
    for (int q = 0; q < pos && ok; ++q)
      if (g.has_edge(img[q], v) != g.has_edge(q, pos)) ok = false;
    if (!ok) continue;
    img[pos] = v;
    used[v] = true;
    search_automorphisms(g, img, used, pos + 1, out);
    used[v] = false;
  }
}

}  // namespace

std::vector<Permutation> automorphism_group(const SmallGraph& g) {
  std::vector<Permutation> out;
  Permutation img(g.n);
  std::vector<bool> used(g.n, false);
  search_automorphisms(g, img, used, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Branch and bound over relabelings.  img[q] is the original vertex
// placed at canonical position q.  Row bits are packed with earlier
// positions more significant, so comparing rows top-down realizes
// lexicographic comparison of the relabeled matrix.
struct CanonSearch {
  const SmallGraph& g;
  int n;
  std::vector<uint16_t> best;     // best[q] = row bitmask of position q
  std::vector<uint16_t> rows;     // current partial rows
  Permutation img;
  std::vector<bool> used;
  bool have_best = false;

  explicit CanonSearch(const SmallGraph& gg) : g(gg), n(gg.n) {
    best.assign(n, 0xffff);
    rows.assign(n, 0);
    img.assign(n, -1);
    used.assign(n, false);
  }

  static uint16_t bit_for(int pos) { return uint16_t(1u << (kMaxVertices - 1 - pos)); }

  void run(int pos) {
    if (pos == n) {
      if (!have_best || rows < best) {
        best = rows;
        have_best = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      // Placing v at pos fills row pos against the prefix and appends
      // one bit to each earlier row.
      std::vector<uint16_t> saved(rows.begin(), rows.begin() + pos);
      uint16_t row = 0;
      for (int q = 0; q < pos; ++q)
        if (g.has_edge(img[q], v)) {
          row |= bit_for(q);
          rows[q] |= bit_for(pos);
        }
      rows[pos] = row;
      // Prune only when the partial prefix is already strictly larger
      // than the incumbent: later placements only add lower bits, so a
      // strictly larger prefix can never recover.
      bool viable = true;
      if (have_best) {
        for (int q = 0; q <= pos; ++q) {
          if (rows[q] > best[q]) { viable = false; break; }
          if (rows[q] < best[q]) break;
        }
      }
      if (viable) {
        img[pos] = v;
        used[v] = true;
        run(pos + 1);
        used[v] = false;
      }
      std::copy(saved.begin(), saved.end(), rows.begin());
    }
  }
};

}  // namespace

std::vector<uint16_t> canonical_form(const SmallGraph& g) {
  CanonSearch s(g);
  s.run(0);
  return s.best;
}

bool isomorphic(const SmallGraph& a, const SmallGraph& b) {
  if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

SmallGraph delta_to_wye(const SmallGraph& g, const std::array<int, 3>& triangle,
                        const std::string& new_label) {
  auto [a, b, c] = triangle;
  if (!g.has_edge(a, b) || !g.has_edge(b, c) || !g.has_edge(a, c))
    throw std::invalid_argument("not a triangle");
  if (g.n + 1 > kMaxVertices) throw std::invalid_argument("no room for new vertex");
  SmallGraph h = g;
  h.n = g.n + 1;
  h.remove_edge(a, b);
  h.remove_edge(b, c);
  h.remove_edge(a, c);
  int w = g.n;
  h.add_edge(a, w);
  h.add_edge(b, w);
  h.add_edge(c, w);
  if (!h.labels.empty() || !new_label.empty()) {
    h.labels.resize(h.n);
    if (!new_label.empty()) h.labels[w] = new_label;
  }
  return h;
}

SmallGraph wye_to_delta(const SmallGraph& g, int center) {
  if (g.degree(center) != 3) throw std::invalid_argument("center must have degree 3");
  std::array<int, 3> nb{};
  int k = 0;
  for (int v = 0; v < g.n; ++v)
    if (g.has_edge(center, v)) nb[k++] = v;
  // Delete the center, close the triangle on its neighbors, and shift
  // later vertices down one slot.  A triangle edge that already exists
  // stays a single edge.
  SmallGraph h;
  h.n = g.n - 1;
  auto remap = [&](int v) { return v < center ? v : v - 1; };
  for (int u = 0; u < g.n; ++u) {
    if (u == center) continue;
    for (int v = u + 1; v < g.n; ++v) {
      if (v == center) continue;
      if (g.has_edge(u, v)) h.add_edge(remap(u), remap(v));
    }
  }
  h.add_edge(remap(nb[0]), remap(nb[1]));
  h.add_edge(remap(nb[1]), remap(nb[2]));
  h.add_edge(remap(nb[0]), remap(nb[2]));
  if (!g.labels.empty()) {
    h.labels.resize(h.n);
    for (int v = 0; v < g.n; ++v)
      if (v != center) h.labels[remap(v)] = g.labels[v];
  }
  return h;
}

int EdgeSet::count() const { return std::popcount(lo) + std::popcount(hi); }

EdgeSet edge_set_of(const SmallGraph& host, const std::vector<Edge>& edges) {
  EdgeSet s;
  for (const auto& e : edges) {
    int idx = host.edge_index(e);
    if (idx < 0) throw std::invalid_argument("edge not in host graph");
    s.set(idx);
  }
  return s;
}

std::vector<Edge> edges_of_set(const SmallGraph& host, const EdgeSet& s) {
  std::vector<Edge> out;
  auto edges = host.edge_list();
  for (size_t i = 0; i < edges.size(); ++i)
    if (s.test((int)i)) out.push_back(edges[i]);
  return out;
}

EdgeSet permute_edge_set(const SmallGraph& host, const EdgeSet& s, const Permutation& p) {
  EdgeSet out;
  auto edges = host.edge_list();
  for (size_t i = 0; i < edges.size(); ++i) {
    if (!s.test((int)i)) continue;
    Edge img(p[edges[i].u], p[edges[i].v]);
    int idx = host.edge_index(img);
    if (idx < 0) throw std::invalid_argument("permutation does not preserve host edges");
    out.set(idx);
  }
  return out;
}

std::vector<EdgeSetOrbit> orbit_dedup(const SmallGraph& host,
                                      const std::vector<EdgeSet>& sets,
                                      const std::vector<Permutation>& group) {
  std::set<EdgeSet> pending(sets.begin(), sets.end());
  std::vector<EdgeSetOrbit> out;
  while (!pending.empty()) {
    EdgeSet seed = *pending.begin();
    // Closure of the seed under the group.
    std::set<EdgeSet> orbit;
    std::vector<EdgeSet> frontier{seed};
    orbit.insert(seed);
    while (!frontier.empty()) {
      EdgeSet cur = frontier.back();
      frontier.pop_back();
      for (const auto& p : group) {
        EdgeSet img = permute_edge_set(host, cur, p);
        if (orbit.insert(img).second) frontier.push_back(img);
      }
    }
    EdgeSetOrbit rec;
    rec.representative = *orbit.begin();
    rec.size = (long)orbit.size();
    out.push_back(rec);
    for (const auto& m : orbit) pending.erase(m);
  }
  std::sort(out.begin(), out.end(), [](const EdgeSetOrbit& a, const EdgeSetOrbit& b) {
    return std::tie(a.representative.lo, a.representative.hi) <
           std::tie(b.representative.lo, b.representative.hi);
  });
  return out;
}

}  // namespace petfam
