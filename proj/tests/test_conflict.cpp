#include <doctest.h>

#include "conflict.hpp"
#include "family.hpp"
#include "pipeline.hpp"

#include <random>
#include <set>

using namespace petfam;

namespace {

FlatScene scene_of(FamilyMember m, int record) {
  SmallGraph g = family_graph(m);
  auto mps = enumerate_mps(g);
  RecordScenes scenes = build_record_scenes(g, mps.records[record].removal);
  return scenes.scenes[0];
}

ConflictGraph make_cg(int n, std::vector<SignedEdge> edges) {
  ConflictGraph cg;
  cg.fragment_count = n;
  cg.edges = std::move(edges);
  return cg;
}

}  // namespace

TEST_CASE("balance checking on hand-built signed graphs") {
  // no edges: trivially balanced
  auto empty = make_cg(3, {});
  auto r = check_balance(empty);
  CHECK(r.balanced);
  CHECK(balance_certificate_ok(empty, r));

  // one negative edge wants opposite sides; fine
  auto lone = make_cg(2, {{0, 1, true}});
  r = check_balance(lone);
  CHECK(r.balanced);
  REQUIRE(r.side.size() == 2);
  CHECK(r.side[0] != r.side[1]);
  CHECK(balance_certificate_ok(lone, r));

  // a digon with both signs cannot be satisfied
  auto digon = make_cg(2, {{0, 1, true}, {0, 1, false}});
  r = check_balance(digon);
  CHECK(!r.balanced);
  CHECK(r.odd_cycle.size() == 2);
  CHECK(balance_certificate_ok(digon, r));

  // all-negative triangle is frustrated
  auto tri = make_cg(3, {{0, 1, true}, {0, 2, true}, {1, 2, true}});
  r = check_balance(tri);
  CHECK(!r.balanced);
  CHECK(r.odd_cycle.size() == 3);
  CHECK(balance_certificate_ok(tri, r));

  // positive edges only: balanced with everyone on one side
  auto pos = make_cg(4, {{0, 1, false}, {1, 2, false}, {2, 3, false}});
  r = check_balance(pos);
  CHECK(r.balanced);
  CHECK(balance_certificate_ok(pos, r));

  // disconnected pieces are judged independently
  auto two = make_cg(5, {{0, 1, true}, {0, 1, false}, {2, 3, true}});
  CHECK(!check_balance(two).balanced);
}

TEST_CASE("balance is invariant under switching") {
  // flipping all edges across a vertex cut never changes balance
  std::mt19937 rng(314159u);
  for (auto [m, rec] : {std::pair{FamilyMember::K44mE, 0}, std::pair{FamilyMember::K44mE, 4},
                        std::pair{FamilyMember::K6, 1}, std::pair{FamilyMember::G9, 2}}) {
    FlatScene s = scene_of(m, rec);
    ConflictGraph cg = conflict_graph(s);
    bool base = check_balance(cg).balanced;
    for (int trial = 0; trial < 20; ++trial) {
      uint32_t cut = rng() % (1u << cg.fragment_count);
      ConflictGraph flipped = cg;
      for (auto& e : flipped.edges)
        if (((cut >> e.a) & 1) != ((cut >> e.b) & 1)) e.negative = !e.negative;
      auto r = check_balance(flipped);
      CHECK(r.balanced == base);
      CHECK(balance_certificate_ok(flipped, r));
    }
  }
}

TEST_CASE("tampered certificates are rejected") {
  auto digon = make_cg(2, {{0, 1, true}, {0, 1, false}});
  auto r = check_balance(digon);
  REQUIRE(!r.balanced);
  auto broken = r;
  broken.odd_cycle.pop_back();
  CHECK(!balance_certificate_ok(digon, broken));

  auto lone = make_cg(2, {{0, 1, true}});
  auto ok = check_balance(lone);
  REQUIRE(ok.balanced);
  auto wrong = ok;
  wrong.side[0] = wrong.side[1];
  CHECK(!balance_certificate_ok(lone, wrong));
}

TEST_CASE("frozen conflict graphs of the small hosts") {
  // K6, path removal: the two end fragments can share a side with the
  // middle one but not with each other
  ConflictGraph k6_path = conflict_graph(scene_of(FamilyMember::K6, 0));
  CHECK(k6_path.edges == std::vector<SignedEdge>{{0, 1, false}, {0, 2, false}, {1, 2, true}});
  CHECK(!check_balance(k6_path).balanced);

  // K6, perfect matching: three mutual conflicts
  ConflictGraph k6_pm = conflict_graph(scene_of(FamilyMember::K6, 1));
  CHECK(k6_pm.edges == std::vector<SignedEdge>{{0, 1, true}, {0, 2, true}, {1, 2, true}});
  CHECK(!check_balance(k6_pm).balanced);

  // Petersen, disjoint pair: an unbalanced digon
  ConflictGraph pg0 = conflict_graph(scene_of(FamilyMember::PG, 0));
  CHECK(pg0.edges == std::vector<SignedEdge>{{0, 1, true}, {0, 1, false}});
  CHECK(!check_balance(pg0).balanced);

  // Petersen, triple: all-negative triangle
  ConflictGraph pg1 = conflict_graph(scene_of(FamilyMember::PG, 1));
  CHECK(pg1.edges == std::vector<SignedEdge>{{0, 1, true}, {0, 2, true}, {1, 2, true}});
  CHECK(!check_balance(pg1).balanced);
}

TEST_CASE("every two-fragment G9 record is an unbalanced digon") {
  SmallGraph g = family_graph(FamilyMember::G9);
  auto mps = enumerate_mps(g);
  int digons = 0;
  for (const auto& rec : mps.records) {
    if (rec.removal.count() != 2) continue;
    RecordScenes scenes = build_record_scenes(g, rec.removal);
    for (const auto& s : scenes.scenes) {
      ConflictGraph cg = conflict_graph(s);
      CHECK(cg.edges == std::vector<SignedEdge>{{0, 1, true}, {0, 1, false}});
      CHECK(!check_balance(cg).balanced);
    }
    ++digons;
  }
  CHECK(digons == 6);
}

TEST_CASE("balanced records appear only in K4,4-e") {
  // full tally over the family; also pins which records balance
  std::set<std::pair<FamilyMember, int>> balanced;
  for (FamilyMember m : kAllMembers) {
    MemberAnalysis an = analyze_member(m, /*run_search=*/false);
    for (size_t i = 0; i < an.records.size(); ++i)
      if (an.records[i].balance.balanced) balanced.insert({m, (int)i});
  }
  std::set<std::pair<FamilyMember, int>> want{{FamilyMember::K44mE, 0},
                                              {FamilyMember::K44mE, 1},
                                              {FamilyMember::K44mE, 6},
                                              {FamilyMember::K44mE, 7}};
  CHECK(balanced == want);
}

TEST_CASE("pairwise parities drive the published edge kinds") {
  // recompute each conflict edge from the primitive queries
  for (auto [m, rec] : {std::pair{FamilyMember::K44mE, 6}, std::pair{FamilyMember::G9, 2},
                        std::pair{FamilyMember::K6, 1}}) {
    FlatScene s = scene_of(m, rec);
    ConflictGraph cg = conflict_graph(s);
    std::set<std::pair<std::pair<int, int>, bool>> got;
    for (const auto& e : cg.edges) got.insert({{e.a, e.b}, e.negative});
    std::set<std::pair<std::pair<int, int>, bool>> rebuilt;
    for (int a = 0; a < s.fragment_count(); ++a)
      for (int b = a + 1; b < s.fragment_count(); ++b) {
        auto parities = pairwise_base_parities(s, a, b);
        if (parities.size() == 2) rebuilt.insert({{a, b}, true});
        if (anti_conflict_witness(s, a, b)) rebuilt.insert({{a, b}, false});
      }
    CHECK(got == rebuilt);
  }
}

TEST_CASE("conflict graphs do not depend on the embedding class") {
  for (auto [m, rec] : {std::pair{FamilyMember::G9, 2}, std::pair{FamilyMember::G9, 4},
                        std::pair{FamilyMember::G8, 9}}) {
    SmallGraph g = family_graph(m);
    auto mps = enumerate_mps(g);
    RecordScenes scenes = build_record_scenes(g, mps.records[rec].removal);
    REQUIRE(scenes.scenes.size() > 1);
    ConflictGraph first = conflict_graph(scenes.scenes[0]);
    for (size_t i = 1; i < scenes.scenes.size(); ++i)
      CHECK(conflict_graph(scenes.scenes[i]) == first);
  }
}
