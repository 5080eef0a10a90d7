#include "family.hpp"

#include "cycles.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace petfam {

const char* family_display_name(FamilyMember m) {
  switch (m) {
    case FamilyMember::K6: return "K6";
    case FamilyMember::K331: return "K3,3,1";
    case FamilyMember::G7: return "G7";
    case FamilyMember::G8: return "G8";
    case FamilyMember::G9: return "G9";
    case FamilyMember::K44mE: return "K4,4-e";
    case FamilyMember::PG: return "Petersen";
  }
  return "?";
}

std::optional<FamilyMember> family_from_name(const std::string& name) {
  std::string key;
  for (char c : name)
    if (std::isalnum((unsigned char)c)) key.push_back((char)std::tolower((unsigned char)c));
  if (key == "k6") return FamilyMember::K6;
  if (key == "k331") return FamilyMember::K331;
  if (key == "g7") return FamilyMember::G7;
  if (key == "g8") return FamilyMember::G8;
  if (key == "g9") return FamilyMember::G9;
  if (key == "k44e" || key == "k44me") return FamilyMember::K44mE;
  if (key == "pg" || key == "petersen") return FamilyMember::PG;
  return std::nullopt;
}

namespace {

SmallGraph make_k6() {
  SmallGraph g;
  g.n = 6;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) g.add_edge(u, v);
  g.labels = {"1", "2", "3", "4", "5", "6"};
  return g;
}

// Complete tripartite on parts {v}, {a,b,c}, {x,y,z}.
SmallGraph make_k331() {
  SmallGraph g;
  g.n = 7;
  g.labels = {"v", "a", "b", "c", "x", "y", "z"};
  for (int i = 1; i <= 6; ++i) g.add_edge(0, i);
  for (int a = 1; a <= 3; ++a)
    for (int x = 4; x <= 6; ++x) g.add_edge(a, x);
  return g;
}

SmallGraph make_g7() {
  SmallGraph g = make_k6();
  return delta_to_wye(g, {3, 4, 5}, "7");
}

SmallGraph make_g8() {
  SmallGraph g = make_k331();
  // a triangle through the apex: v, a, x
  return delta_to_wye(g, {0, 1, 4}, "w");
}

// The nine-vertex member: a triangle on {0,7,8}, each triangle vertex
// subdividing-style attached to two degree-3 vertices, plus a matching
// layer closing everything into K3,3 after smoothing.
SmallGraph make_g9() {
  SmallGraph g;
  g.n = 9;
  g.add_edge(0, 7);
  g.add_edge(7, 8);
  g.add_edge(0, 8);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(3, 7);
  g.add_edge(4, 7);
  g.add_edge(5, 8);
  g.add_edge(6, 8);
  g.add_edge(1, 4);
  g.add_edge(1, 6);
  g.add_edge(2, 3);
  g.add_edge(2, 5);
  g.add_edge(3, 6);
  g.add_edge(4, 5);
  return g;
}

SmallGraph make_k44me() {
  SmallGraph g;
  g.n = 8;
  g.labels = {"1", "2", "3", "4", "5", "6", "7", "8"};
  const int left[] = {0, 1, 2, 7};
  const int right[] = {4, 5, 6, 3};
  for (int u : left)
    for (int v : right)
      if (!(u == 7 && v == 3)) g.add_edge(u, v);
  return g;
}

// Kneser graph on the 2-subsets of {1..5}, disjointness adjacency.
SmallGraph make_petersen() {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b) pairs.push_back({a, b});
  SmallGraph g;
  g.n = 10;
  g.labels.resize(10);
  for (int i = 0; i < 10; ++i)
    g.labels[i] = "{" + std::to_string(pairs[i].first) + "," +
                  std::to_string(pairs[i].second) + "}";
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      auto [a, b] = pairs[i];
      auto [c, d] = pairs[j];
      if (a != c && a != d && b != c && b != d) g.add_edge(i, j);
    }
  return g;
}

}  // namespace

SmallGraph family_graph(FamilyMember m) {
  switch (m) {
    case FamilyMember::K6: return make_k6();
    case FamilyMember::K331: return make_k331();
    case FamilyMember::G7: return make_g7();
    case FamilyMember::G8: return make_g8();
    case FamilyMember::G9: return make_g9();
    case FamilyMember::K44mE: return make_k44me();
    case FamilyMember::PG: return make_petersen();
  }
  throw std::invalid_argument("unknown family member");
}

std::optional<FamilyMember> identify_family(const SmallGraph& g) {
  for (FamilyMember m : kAllMembers) {
    SmallGraph h = family_graph(m);
    if (g.n == h.n && g.edge_count() == h.edge_count() && isomorphic(g, h)) return m;
  }
  return std::nullopt;
}

std::vector<SmallGraph> wye_delta_closure(const SmallGraph& seed) {
  std::map<std::vector<uint16_t>, SmallGraph> seen;
  std::vector<SmallGraph> frontier{seed};
  seen.emplace(canonical_form(seed), seed);
  while (!frontier.empty()) {
    SmallGraph g = std::move(frontier.back());
    frontier.pop_back();
    std::vector<SmallGraph> next;
    if (g.n + 1 <= kMaxVertices)
      for (const auto& t : all_triangles(g)) next.push_back(delta_to_wye(g, t));
    for (int v = 0; v < g.n; ++v)
      if (g.degree(v) == 3) next.push_back(wye_to_delta(g, v));
    for (auto& h : next) {
      h.labels.clear();
      auto key = canonical_form(h);
      if (seen.emplace(key, h).second) frontier.push_back(h);
    }
  }
  std::vector<SmallGraph> out;
  for (auto& [key, g] : seen) out.push_back(g);
  return out;
}

}  // namespace petfam
