#include "pipeline.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <stdexcept>

namespace petfam {

std::vector<Permutation> removal_stabilizer(const SmallGraph& planar_part,
                                            const std::vector<Edge>& fragments) {
  std::set<Edge> frag_set(fragments.begin(), fragments.end());
  std::vector<Permutation> out;
  for (const auto& p : automorphism_group(planar_part)) {
    bool keeps = true;
    for (const auto& e : fragments)
      if (!frag_set.count(Edge(p[e.u], p[e.v]))) { keeps = false; break; }
    if (keeps) out.push_back(p);
  }
  return out;
}

RecordScenes build_record_scenes(const SmallGraph& g, const EdgeSet& removal,
                                 int embedding_limit) {
  auto fragments = edges_of_set(g, removal);
  SmallGraph planar_part = remove_edge_set(g, removal);
  if (!planar_part.connected())
    throw std::logic_error("planar part of a record should be connected");
  auto stab = removal_stabilizer(planar_part, fragments);
  RecordScenes out;
  for (const auto& cls : embedding_classes(planar_part, stab)) {
    if (embedding_limit > 0 && (int)out.scenes.size() >= embedding_limit) break;
    out.scenes.push_back(build_scene(g, fragments, cls.representative));
    out.class_raw_counts.push_back(cls.raw_count);
  }
  return out;
}

RecordAnalysis analyze_record(const SmallGraph& g, const MpsRecord& rec, bool run_search,
                              int embedding_limit) {
  RecordAnalysis out;
  out.removal = rec.removal;
  out.orbit_size = rec.orbit_size;
  out.shape = removal_shape_name(g, rec.removal);
  out.fragment_count = rec.removal.count();

  SmallGraph planar_part = remove_edge_set(g, rec.removal);
  out.planar_part_connected = planar_part.connected();
  out.planar_part_spanning = planar_part.n == g.n;

  RecordScenes scenes = build_record_scenes(g, rec.removal, embedding_limit);
  out.embedding_class_count = (int)scenes.scenes.size();
  if (scenes.scenes.empty()) throw std::logic_error("record has no sphere embedding");

  out.conflict = conflict_graph(scenes.scenes[0]);
  out.conflict_uniform = true;
  for (size_t i = 1; i < scenes.scenes.size(); ++i)
    if (!(conflict_graph(scenes.scenes[i]) == out.conflict)) out.conflict_uniform = false;
  out.balance = check_balance(out.conflict);

  out.configs_per_scene = expected_tangle_config_count(out.fragment_count);
  if (run_search) {
    for (const auto& scene : scenes.scenes) {
      auto configs = all_tangle_configs(scene);
      if ((long)configs.size() != out.configs_per_scene)
        throw std::logic_error("configuration count mismatch");
      for (const auto& cfg : configs) {
        ++out.searched_configs;
        if (find_odd_pair(scene, cfg)) ++out.linked_configs;
      }
    }
    out.all_linked = out.searched_configs > 0 && out.linked_configs == out.searched_configs;
  }
  return out;
}

MemberAnalysis analyze_member(FamilyMember member, bool run_search, int jobs,
                              int embedding_limit) {
  MemberAnalysis out;
  out.member = member;
  SmallGraph g = family_graph(member);
  out.mps = enumerate_mps(g);
  out.records.resize(out.mps.records.size());
  parallel_for(jobs, (long)out.mps.records.size(), [&](long i) {
    out.records[i] = analyze_record(g, out.mps.records[i], run_search, embedding_limit);
  });
  return out;
}

namespace {

bool fail(std::string* message, const std::string& why) {
  if (message) *message = why;
  return false;
}

std::vector<std::pair<int, int>> parity_table(const FlatScene& scene,
                                              const TangleConfig& cfg) {
  std::vector<std::pair<int, int>> out;
  out.reserve(scene.disjoint_pairs.size());
  for (auto [i, j] : scene.disjoint_pairs)
    out.push_back({linking_parity(scene, cfg, i, j), linking_parity(scene, cfg, j, i)});
  return out;
}

}  // namespace

bool verify_scene_invariants(const FlatScene& scene, int reroute_budget, uint64_t seed,
                             std::string* message) {
  int k = scene.fragment_count();
  auto configs = all_tangle_configs(scene);
  if ((long)configs.size() != expected_tangle_config_count(k))
    return fail(message, "configuration count does not match the product formula");

  // Arc-versus-cycle crossing parity is a Jordan parity: it must agree
  // with which side of the cycle each endpoint lands on.
  for (int f = 0; f < k; ++f) {
    const Edge& e = scene.fragments[f];
    for (size_t c = 0; c < scene.cycles.size(); ++c) {
      const SceneCycle& sc = scene.cycles[c];
      if (sc.frag_mask != 0) continue;
      if ((sc.vertex_mask >> e.u) & 1 || (sc.vertex_mask >> e.v) & 1) continue;
      int sep = cycle_separation_parity(scene.emb, sc.planar_edges, sc.vertex_mask, e.u, e.v);
      if (sep != scene.cross_parity[f][c])
        return fail(message, "route crossing parity disagrees with separation parity");
    }
  }

  // Two disjoint closed curves cross an even number of times, so the
  // forward and reverse base parities differ by the arcs' own
  // crossings.
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (a == b) continue;
      for (size_t c1 = 0; c1 < scene.cycles.size(); ++c1) {
        if (scene.cycles[c1].frag_mask != (1u << a)) continue;
        for (size_t c2 = 0; c2 < scene.cycles.size(); ++c2) {
          if (scene.cycles[c2].frag_mask != (1u << b)) continue;
          if (scene.cycles[c1].vertex_mask & scene.cycles[c2].vertex_mask) continue;
          int even = scene.cross_parity[a][c2] ^ scene.cross_parity[b][c1] ^
                     scene.arc_cross[a][b];
          if (even != 0)
            return fail(message, "single-fragment cycle pair violates projected evenness");
        }
      }
    }

  // With the first cycle's lone fragment Below and the second's lone
  // fragment Above, every crossing the first contributes passes under
  // the second, so the parity vanishes identically.
  for (const auto& cfg : configs)
    for (auto [i, j] : scene.disjoint_pairs)
      for (auto [c1, c2] : {std::pair{i, j}, std::pair{j, i}}) {
        uint8_t m1 = scene.cycles[c1].frag_mask;
        uint8_t m2 = scene.cycles[c2].frag_mask;
        if (std::popcount(m1) != 1 || std::popcount(m2) != 1) continue;
        int f = std::countr_zero(m1);
        int g = std::countr_zero(m2);
        if (!cfg.below(f) || cfg.below(g)) continue;
        if (linking_parity(scene, cfg, c1, c2) != 0)
          return fail(message, "opposite-side pair has nonzero linking parity");
      }

  // A cycle through exactly two fragments, against a fragment-free
  // cycle: same-side placements cancel, and a split placement shows
  // the separation parity of either fragment's endpoints.
  for (auto [i, j] : scene.disjoint_pairs)
    for (auto [c1, c2] : {std::pair{i, j}, std::pair{j, i}}) {
      const SceneCycle& a = scene.cycles[c1];
      const SceneCycle& b = scene.cycles[c2];
      if (std::popcount(a.frag_mask) != 2 || b.frag_mask != 0) continue;
      int e = std::countr_zero((unsigned)a.frag_mask);
      int f = std::countr_zero((unsigned)a.frag_mask & ((unsigned)a.frag_mask - 1));
      int sep_e = cycle_separation_parity(scene.emb, b.planar_edges, b.vertex_mask,
                                          scene.fragments[e].u, scene.fragments[e].v);
      int sep_f = cycle_separation_parity(scene.emb, b.planar_edges, b.vertex_mask,
                                          scene.fragments[f].u, scene.fragments[f].v);
      if (sep_e != sep_f)
        return fail(message, "two-fragment cycle sees unequal endpoint separations");
      for (const auto& cfg : configs) {
        int fwd = linking_parity(scene, cfg, c1, c2);
        int rev = linking_parity(scene, cfg, c2, c1);
        if (cfg.same_side(e, f)) {
          if (fwd != 0 || rev != 0)
            return fail(message, "same-side two-fragment pair has odd parity");
        } else if (fwd != sep_e || rev != sep_e) {
          return fail(message, "split two-fragment pair misses the separation parity");
        }
      }
    }

  long coherent = 0;
  for (const auto& cfg : configs) {
    if (!config_is_coherent(scene, cfg)) continue;
    ++coherent;
    int total = 0;
    for (auto [i, j] : scene.disjoint_pairs) {
      int fwd = linking_parity(scene, cfg, i, j);
      int rev = linking_parity(scene, cfg, j, i);
      if (fwd != rev)
        return fail(message, "coherent configuration gives asymmetric linking parity");
      total ^= fwd;
    }
    if (total != 1)
      return fail(message, "coherent configuration sums to an even total linking parity");
  }
  if (coherent == 0) return fail(message, "no coherent configuration found");

  // Flipping m[a][b] must flip exactly the parities L(C1,C2) with the
  // first fragment in C1 and the second in C2 on a shared side.
  for (const auto& cfg : configs) {
    if (!config_is_coherent(scene, cfg)) continue;
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        if (a == b || !cfg.same_side(a, b)) continue;
        TangleConfig flipped = cfg;
        flipped.m[a][b] ^= 1;
        for (auto [i, j] : scene.disjoint_pairs) {
          int affected_fwd = ((scene.cycles[i].frag_mask >> a) & 1) &&
                             ((scene.cycles[j].frag_mask >> b) & 1);
          int affected_rev = ((scene.cycles[j].frag_mask >> a) & 1) &&
                             ((scene.cycles[i].frag_mask >> b) & 1);
          if ((linking_parity(scene, cfg, i, j) ^ linking_parity(scene, flipped, i, j)) !=
              affected_fwd)
            return fail(message, "tangle bit flip has the wrong forward footprint");
          if ((linking_parity(scene, cfg, j, i) ^ linking_parity(scene, flipped, j, i)) !=
              affected_rev)
            return fail(message, "tangle bit flip has the wrong reverse footprint");
        }
      }
    break;  // one coherent configuration exercises the linearity fully
  }

  // Rerouting with transport.
  std::mt19937_64 rng(seed);
  std::vector<std::vector<ArcRoute>> alternatives(k);
  for (int f = 0; f < k; ++f) {
    const Edge& e = scene.fragments[f];
    int depth = (int)scene.routes[f].crossed.size() + 2;
    alternatives[f] = simple_routes(scene.emb, e.u, e.v, depth);
  }
  if (configs.empty()) return fail(message, "no configurations to reroute");
  for (int step = 0; step < reroute_budget; ++step) {
    int t = (int)(rng() % (uint64_t)k);
    const auto& alts = alternatives[t];
    if (alts.size() < 2) continue;
    const ArcRoute& next = alts[rng() % alts.size()];
    if (next == scene.routes[t]) continue;
    FlatScene moved = reroute_fragment(scene, t, next);
    const TangleConfig& cfg = configs[rng() % configs.size()];
    TangleConfig carried = transport_tangle(scene, cfg, t, scene.routes[t], next);
    if (parity_table(scene, cfg) != parity_table(moved, carried))
      return fail(message, "reroute with transported tangle changed a linking parity");
  }
  return true;
}

}  // namespace petfam
