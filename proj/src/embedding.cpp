#include "embedding.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace petfam {

std::vector<std::vector<Dart>> trace_faces(const SmallGraph& g, const RotationSystem& rs) {
  // pos[v][u] = index of u within rot[v]
  std::array<std::array<int8_t, kMaxVertices>, kMaxVertices> pos;
  for (int v = 0; v < g.n; ++v)
    for (size_t i = 0; i < rs.rot[v].size(); ++i) pos[v][rs.rot[v][i]] = (int8_t)i;

  std::vector<std::vector<Dart>> faces;
  std::array<std::array<bool, kMaxVertices>, kMaxVertices> used{};
  for (int u = 0; u < g.n; ++u)
    for (int v : rs.rot[u]) {
      if (used[u][v]) continue;
      std::vector<Dart> walk;
      int a = u, b = v;
      do {
        used[a][b] = true;
        walk.push_back(Dart{a, b});
        const auto& r = rs.rot[b];
        int next = r[(pos[b][a] + 1) % r.size()];
        a = b;
        b = next;
      } while (!(a == u && b == v));
      faces.push_back(std::move(walk));
    }
  return faces;
}

bool rotation_system_is_planar(const SmallGraph& g, const RotationSystem& rs) {
  if (!g.connected()) return false;
  int f = (int)trace_faces(g, rs).size();
  return g.n - g.edge_count() + f == 2;
}

namespace {

long rotation_leaf_count(const SmallGraph& g) {
  long total = 1;
  for (int v = 0; v < g.n; ++v) {
    long fact = 1;
    for (int i = 2; i < g.degree(v); ++i) {
      fact *= i;
      if (fact > 1'000'000'000L) return fact;  // already absurd
    }
    if (total > 2'000'000'000L / std::max(fact, 1L)) return 4'000'000'000L;
    total *= fact;
  }
  return total;
}

struct RotationEnumerator {
  const SmallGraph& g;
  const std::function<void(const RotationSystem&)>& visit;
  RotationSystem rs;

  void run(int v) {
    if (v == g.n) {
      if (rotation_system_is_planar(g, rs)) visit(rs);
      return;
    }
    auto& list = rs.rot[v];
    // Fix the first neighbor; permute the tail in lexicographic order.
    std::sort(list.begin() + (list.size() > 1 ? 1 : 0), list.end());
    do {
      run(v + 1);
    } while (list.size() > 2 && std::next_permutation(list.begin() + 1, list.end()));
  }
};

}  // namespace

void for_each_planar_rotation_system(const SmallGraph& g,
                                     const std::function<void(const RotationSystem&)>& visit,
                                     long guard) {
  if (!g.connected()) throw std::invalid_argument("graph must be connected");
  if (rotation_leaf_count(g) > guard)
    throw std::invalid_argument("rotation system space too large");
  RotationSystem rs;
  rs.rot.resize(g.n);
  for (int v = 0; v < g.n; ++v)
    for (int u = 0; u < g.n; ++u)
      if (g.has_edge(v, u)) rs.rot[v].push_back(u);
  RotationEnumerator en{g, visit, std::move(rs)};
  en.run(0);
}

long count_planar_rotation_systems(const SmallGraph& g) {
  long count = 0;
  for_each_planar_rotation_system(g, [&](const RotationSystem&) { ++count; });
  return count;
}

namespace {

// Normalize one cyclic list so its smallest entry comes first.
std::vector<int> normalize_cyclic(const std::vector<int>& list) {
  if (list.empty()) return {};
  size_t at = std::min_element(list.begin(), list.end()) - list.begin();
  std::vector<int> out(list.size());
  for (size_t i = 0; i < list.size(); ++i) out[i] = list[(at + i) % list.size()];
  return out;
}

std::vector<int> serialize(const SmallGraph& g, const std::vector<std::vector<int>>& rot) {
  std::vector<int> out;
  for (int v = 0; v < g.n; ++v) {
    auto norm = normalize_cyclic(rot[v]);
    out.insert(out.end(), norm.begin(), norm.end());
    out.push_back(-1);
  }
  return out;
}

std::vector<std::vector<int>> transform_rotation(const SmallGraph& g,
                                                 const RotationSystem& rs,
                                                 const Permutation& p, bool reflect) {
  std::vector<std::vector<int>> out(g.n);
  for (int v = 0; v < g.n; ++v) {
    std::vector<int> img;
    img.reserve(rs.rot[v].size());
    for (int u : rs.rot[v]) img.push_back(p[u]);
    if (reflect) std::reverse(img.begin(), img.end());
    out[p[v]] = std::move(img);
  }
  return out;
}

}  // namespace

std::vector<int> embedding_key(const SmallGraph& g, const RotationSystem& rs,
                               const std::vector<Permutation>& group) {
  std::vector<int> best;
  for (const auto& p : group)
    for (bool reflect : {false, true}) {
      auto cand = serialize(g, transform_rotation(g, rs, p, reflect));
      if (best.empty() || cand < best) best = std::move(cand);
    }
  return best;
}

std::vector<EmbeddingClass> embedding_classes(const SmallGraph& g,
                                              const std::vector<Permutation>& group) {
  struct Entry {
    std::vector<int> self_key;
    RotationSystem rep;
    long count = 0;
  };
  std::map<std::vector<int>, Entry> classes;
  Permutation id = identity_permutation(g.n);
  for_each_planar_rotation_system(g, [&](const RotationSystem& rs) {
    auto key = embedding_key(g, rs, group);
    auto self = serialize(g, rs.rot);
    auto& e = classes[key];
    if (e.count == 0 || self < e.self_key) {
      e.self_key = self;
      e.rep = rs;
    }
    ++e.count;
  });
  std::vector<EmbeddingClass> out;
  for (auto& [key, e] : classes)
    out.push_back(EmbeddingClass{std::move(e.rep), e.count});
  return out;
}

int Embedding::face_at_vertex(int v) const {
  if (rs.rot[v].empty()) throw std::invalid_argument("isolated vertex has no face");
  return face_of(v, rs.rot[v][0]);
}

Embedding build_embedding(const SmallGraph& g, const RotationSystem& rs) {
  if (!rotation_system_is_planar(g, rs))
    throw std::invalid_argument("rotation system is not a sphere embedding");
  Embedding emb;
  emb.graph = g;
  emb.rs = rs;
  emb.faces = trace_faces(g, rs);
  emb.face_of_dart_.assign(kMaxVertices * kMaxVertices, -1);
  emb.walk_index_of_dart_.assign(kMaxVertices * kMaxVertices, -1);
  for (size_t f = 0; f < emb.faces.size(); ++f)
    for (size_t t = 0; t < emb.faces[f].size(); ++t) {
      const Dart& d = emb.faces[f][t];
      emb.face_of_dart_[Embedding::dart_id(d.from, d.to)] = (int)f;
      emb.walk_index_of_dart_[Embedding::dart_id(d.from, d.to)] = (int)t;
    }
  return emb;
}

}  // namespace petfam
