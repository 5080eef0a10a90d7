#include <doctest.h>

#include "family.hpp"
#include "minor.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <random>

using namespace petfam;

namespace {

std::vector<int> degree_sequence(const SmallGraph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.n; ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("the seven members have the expected shapes") {
  const std::map<FamilyMember, std::pair<int, std::vector<int>>> want{
      {FamilyMember::K6, {6, {5, 5, 5, 5, 5, 5}}},
      {FamilyMember::K331, {7, {4, 4, 4, 4, 4, 4, 6}}},
      {FamilyMember::G7, {7, {3, 4, 4, 4, 5, 5, 5}}},
      {FamilyMember::G8, {8, {3, 3, 3, 4, 4, 4, 4, 5}}},
      {FamilyMember::G9, {9, {3, 3, 3, 3, 4, 4, 4, 3, 3}}},
      {FamilyMember::K44mE, {8, {3, 3, 4, 4, 4, 4, 4, 4}}},
      {FamilyMember::PG, {10, {3, 3, 3, 3, 3, 3, 3, 3, 3, 3}}}};
  for (FamilyMember m : kAllMembers) {
    SmallGraph g = family_graph(m);
    CAPTURE(family_display_name(m));
    CHECK(g.n == want.at(m).first);
    CHECK(g.edge_count() == 15);
    auto expect = want.at(m).second;
    std::sort(expect.begin(), expect.end());
    CHECK(degree_sequence(g) == expect);
    CHECK(g.connected());
    CHECK(!is_planar(g));
    CHECK(!is_apex(g));
  }
}

TEST_CASE("automorphism group orders across the family") {
  const std::map<FamilyMember, long> want{
      {FamilyMember::K6, 720}, {FamilyMember::K331, 72}, {FamilyMember::G7, 36},
      {FamilyMember::G8, 8},   {FamilyMember::G9, 12},   {FamilyMember::K44mE, 72},
      {FamilyMember::PG, 120}};
  for (FamilyMember m : kAllMembers)
    CHECK((long)automorphism_group(family_graph(m)).size() == want.at(m));
}

TEST_CASE("apex detection on graphs that are apex") {
  CHECK(is_apex(build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3},
                                {1, 4}, {2, 3}, {2, 4}, {3, 4}})));  // K5
  SmallGraph k33 = build_graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                                   {2, 3}, {2, 4}, {2, 5}});
  CHECK(is_apex(k33));
}

TEST_CASE("exchange closure from any seed has seven classes") {
  auto closure = wye_delta_closure(family_graph(FamilyMember::K6));
  CHECK(closure.size() == 7);
  // every class is one of the family constructions, each exactly once
  std::map<FamilyMember, int> seen;
  for (const auto& g : closure) {
    auto m = identify_family(g);
    REQUIRE(m.has_value());
    seen[*m] += 1;
    CHECK(g.edge_count() == 15);
  }
  CHECK(seen.size() == 7);

  CHECK(wye_delta_closure(family_graph(FamilyMember::PG)).size() == 7);
  CHECK(wye_delta_closure(family_graph(FamilyMember::G8)).size() == 7);
}

TEST_CASE("specific exchange edges of the family") {
  SmallGraph k6 = family_graph(FamilyMember::K6);
  CHECK(identify_family(delta_to_wye(k6, {0, 1, 2})) == FamilyMember::G7);
  SmallGraph k331 = family_graph(FamilyMember::K331);
  CHECK(identify_family(delta_to_wye(k331, {0, 1, 4})) == FamilyMember::G8);
  SmallGraph g8 = family_graph(FamilyMember::G8);
  CHECK(identify_family(wye_to_delta(g8, g8.n - 1)) == FamilyMember::K331);
}

TEST_CASE("identify_family sees through relabeling and rejects strangers") {
  std::mt19937 rng(5u);
  for (FamilyMember m : kAllMembers) {
    SmallGraph g = family_graph(m);
    Permutation p(g.n);
    for (int i = 0; i < g.n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    CHECK(identify_family(apply_permutation(g, p)) == m);
  }
  CHECK(!identify_family(build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})).has_value());
  // right size, wrong graph: K6 plus an isolated-ish pendant wheel
  SmallGraph near = family_graph(FamilyMember::K44mE);
  near.remove_edge(0, 4);
  near.add_edge(0, 1);
  CHECK(!identify_family(near).has_value());
}

TEST_CASE("names round trip and accept common spellings") {
  for (FamilyMember m : kAllMembers)
    CHECK(family_from_name(family_display_name(m)) == m);
  CHECK(family_from_name("k331") == FamilyMember::K331);
  CHECK(family_from_name("K3,3,1") == FamilyMember::K331);
  CHECK(family_from_name("K4,4-e") == FamilyMember::K44mE);
  CHECK(family_from_name("k44me") == FamilyMember::K44mE);
  CHECK(family_from_name("petersen") == FamilyMember::PG);
  CHECK(family_from_name("PG") == FamilyMember::PG);
  CHECK(!family_from_name("K7").has_value());
  CHECK(!family_from_name("").has_value());
}
