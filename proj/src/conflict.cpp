#include "conflict.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace petfam {

std::set<int> pairwise_base_parities(const FlatScene& scene, int fe, int ff) {
  std::set<int> out;
  uint8_t me = uint8_t(1u << fe), mf = uint8_t(1u << ff);
  for (size_t c2 = 0; c2 < scene.cycles.size(); ++c2) {
    if (scene.cycles[c2].frag_mask != mf) continue;
    for (size_t c1 = 0; c1 < scene.cycles.size(); ++c1) {
      if (scene.cycles[c1].frag_mask != me) continue;
      if (scene.cycles[c1].vertex_mask & scene.cycles[c2].vertex_mask) continue;
      out.insert(scene.cross_parity[fe][c2]);
      break;  // one disjoint partner suffices; the parity only involves c2
    }
  }
  return out;
}

bool anti_conflict_witness(const FlatScene& scene, int fe, int ff) {
  uint8_t both = uint8_t((1u << fe) | (1u << ff));
  const Edge& e = scene.fragments[fe];
  const Edge& f = scene.fragments[ff];
  for (size_t c1 = 0; c1 < scene.cycles.size(); ++c1) {
    if (scene.cycles[c1].frag_mask != both) continue;
    for (size_t c2 = 0; c2 < scene.cycles.size(); ++c2) {
      if (scene.cycles[c2].frag_mask != 0) continue;
      if (scene.cycles[c1].vertex_mask & scene.cycles[c2].vertex_mask) continue;
      int sep_e = cycle_separation_parity(scene.emb, scene.cycles[c2].planar_edges,
                                          scene.cycles[c2].vertex_mask, e.u, e.v);
      int sep_f = cycle_separation_parity(scene.emb, scene.cycles[c2].planar_edges,
                                          scene.cycles[c2].vertex_mask, f.u, f.v);
      if (sep_e != sep_f)
        throw std::logic_error("separation parity disagrees between fragment endpoints");
      if (sep_e == 1) return true;
    }
  }
  return false;
}

ConflictGraph conflict_graph(const FlatScene& scene) {
  ConflictGraph g;
  g.fragment_count = scene.fragment_count();
  for (int a = 0; a < g.fragment_count; ++a)
    for (int b = a + 1; b < g.fragment_count; ++b) {
      std::set<int> base = pairwise_base_parities(scene, a, b);
      if (base.size() == 2) g.edges.push_back(SignedEdge{a, b, true});
      if (anti_conflict_witness(scene, a, b)) g.edges.push_back(SignedEdge{a, b, false});
    }
  return g;
}

BalanceResult check_balance(const ConflictGraph& g) {
  int n = g.fragment_count;
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge index)
  for (size_t i = 0; i < g.edges.size(); ++i) {
    adj[g.edges[i].a].push_back({g.edges[i].b, (int)i});
    adj[g.edges[i].b].push_back({g.edges[i].a, (int)i});
  }
  BalanceResult res;
  res.side.assign(n, -1);
  std::vector<int> parent_edge(n, -1), parent(n, -1), depth(n, 0);
  for (int root = 0; root < n; ++root) {
    if (res.side[root] != -1) continue;
    res.side[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (auto [w, ei] : adj[v]) {
        if (ei == parent_edge[v]) continue;
        int want = res.side[v] ^ (g.edges[ei].negative ? 1 : 0);
        if (res.side[w] == -1) {
          res.side[w] = want;
          parent[w] = v;
          parent_edge[w] = ei;
          depth[w] = depth[v] + 1;
          queue.push_back(w);
        } else if (res.side[w] != want) {
          // closed walk: v up and w up to a common ancestor, plus this edge
          std::vector<int> cyc{ei};
          int x = v, y = w;
          while (depth[x] > depth[y]) { cyc.push_back(parent_edge[x]); x = parent[x]; }
          while (depth[y] > depth[x]) { cyc.push_back(parent_edge[y]); y = parent[y]; }
          while (x != y) {
            cyc.push_back(parent_edge[x]);
            cyc.push_back(parent_edge[y]);
            x = parent[x];
            y = parent[y];
          }
          res.balanced = false;
          res.odd_cycle = cyc;
          res.side.clear();
          return res;
        }
      }
    }
  }
  res.balanced = true;
  return res;
}

bool balance_certificate_ok(const ConflictGraph& g, const BalanceResult& r) {
  if (r.balanced) {
    if ((int)r.side.size() != g.fragment_count) return false;
    for (const auto& e : g.edges) {
      int s = r.side[e.a] ^ r.side[e.b];
      if (e.negative ? s != 1 : s != 0) return false;
    }
    return true;
  }
  if (r.odd_cycle.empty()) return false;
  // the listed edges must form a closed walk (every vertex touched an
  // even number of times) with an odd number of negative edges
  std::vector<int> deg(g.fragment_count, 0);
  int negatives = 0;
  for (int ei : r.odd_cycle) {
    if (ei < 0 || ei >= (int)g.edges.size()) return false;
    ++deg[g.edges[ei].a];
    ++deg[g.edges[ei].b];
    if (g.edges[ei].negative) ++negatives;
  }
  for (int d : deg)
    if (d % 2) return false;
  return negatives % 2 == 1;
}

}  // namespace petfam
