#include "minor.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace petfam {

SmallGraph contract_edge(const SmallGraph& g, int u, int v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("contracting a non-edge");
  SmallGraph h;
  h.n = g.n - 1;
  auto remap = [&](int x) { return x < v ? x : x - 1; };
  for (int a = 0; a < g.n; ++a) {
    if (a == v) continue;
    for (int b = a + 1; b < g.n; ++b) {
      if (b == v) continue;
      if (g.has_edge(a, b)) h.add_edge(remap(a), remap(b));
    }
  }
  for (int w = 0; w < g.n; ++w)
    if (w != u && w != v && g.has_edge(v, w)) h.add_edge(remap(u), remap(w));
  return h;
}

namespace {

SmallGraph delete_vertex(const SmallGraph& g, int v) {
  SmallGraph h;
  h.n = g.n - 1;
  auto remap = [&](int x) { return x < v ? x : x - 1; };
  for (int a = 0; a < g.n; ++a) {
    if (a == v) continue;
    for (int b = a + 1; b < g.n; ++b) {
      if (b == v) continue;
      if (g.has_edge(a, b)) h.add_edge(remap(a), remap(b));
    }
  }
  return h;
}

}  // namespace

SmallGraph simplify_for_minors(const SmallGraph& g) {
  SmallGraph cur = g;
  cur.labels.clear();
  bool changed = true;
  while (changed && cur.n > 0) {
    changed = false;
    for (int v = 0; v < cur.n; ++v) {
      int d = cur.degree(v);
      if (d <= 1) {
        cur = delete_vertex(cur, v);
        changed = true;
        break;
      }
      if (d == 2) {
        // Smoothing is exactly contraction of one incident edge here.
        int a = std::countr_zero(cur.adj[v]);
        cur = contract_edge(cur, a, v);
        changed = true;
        break;
      }
    }
  }
  return cur;
}

bool has_k5_subgraph(const SmallGraph& g) {
  if (g.n < 5) return false;
  std::vector<int> cand;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) >= 4) cand.push_back(v);
  int k = (int)cand.size();
  if (k < 5) return false;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      if (!g.has_edge(cand[a], cand[b])) continue;
      for (int c = b + 1; c < k; ++c) {
        if (!g.has_edge(cand[a], cand[c]) || !g.has_edge(cand[b], cand[c])) continue;
        for (int d = c + 1; d < k; ++d) {
          if (!g.has_edge(cand[a], cand[d]) || !g.has_edge(cand[b], cand[d]) ||
              !g.has_edge(cand[c], cand[d]))
            continue;
          uint16_t common = g.adj[cand[a]] & g.adj[cand[b]] & g.adj[cand[c]] & g.adj[cand[d]];
          if (common) return true;
        }
      }
    }
  return false;
}

bool has_k33_subgraph(const SmallGraph& g) {
  if (g.n < 6) return false;
  // One side is any triple with at least three common neighbors
  // outside the triple itself.
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      for (int c = b + 1; c < g.n; ++c) {
        uint16_t common = g.adj[a] & g.adj[b] & g.adj[c];
        common &= uint16_t(~((1u << a) | (1u << b) | (1u << c)));
        if (std::popcount(common) >= 3) return true;
      }
  return false;
}

namespace {

std::string canon_key(const SmallGraph& g) {
  auto form = canonical_form(g);
  std::string key(form.size() * 2, '\0');
  for (size_t i = 0; i < form.size(); ++i) {
    key[2 * i] = char(form[i] & 0xff);
    key[2 * i + 1] = char(form[i] >> 8);
  }
  return key;
}

bool minor_search(const SmallGraph& g,
                  std::unordered_map<std::string, bool>& memo) {
  SmallGraph s = simplify_for_minors(g);
  if (s.edge_count() < 9) return false;
  std::string key = canon_key(s);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  bool found = has_k5_subgraph(s) || has_k33_subgraph(s);
  if (!found) {
    for (const auto& e : s.edge_list()) {
      if (minor_search(contract_edge(s, e.u, e.v), memo)) {
        found = true;
        break;
      }
    }
  }
  memo.emplace(std::move(key), found);
  return found;
}

}  // namespace

bool has_forbidden_minor(const SmallGraph& g) {
  thread_local std::unordered_map<std::string, bool> memo;
  return minor_search(g, memo);
}

bool is_planar(const SmallGraph& g) {
  if (g.n <= 4) return true;
  int m = g.edge_count();
  if (m <= 8) return true;
  if (m > 3 * g.n - 6) return false;
  return !has_forbidden_minor(g);
}

bool is_apex(const SmallGraph& g) {
  if (is_planar(g)) return true;
  for (int v = 0; v < g.n; ++v)
    if (is_planar(delete_vertex(g, v))) return true;
  return false;
}

}  // namespace petfam
