// Acceptance battery for the published classification of maximal
// planar subgraphs across the seven-member family.  One line per
// criterion, PASS or FAIL with a computed diagnostic; exits nonzero
// when any criterion fails.  Expected values are the published ones on
// purpose: where the computation disagrees, the line shows both sides
// and the criterion fails rather than being patched to match.

#include "conflict.hpp"
#include "family.hpp"
#include "minor.hpp"
#include "mps.hpp"
#include "pipeline.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace petfam;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

int failed = 0;

void line(int no, const char* id, bool pass, const std::string& note) {
  std::printf("%2d  %-28s %s  %s\n", no, id, pass ? "PASS" : "FAIL", note.c_str());
  std::fflush(stdout);
  if (!pass) ++failed;
}

}  // namespace

int main() {
  // criteria 1 and 2 share one enumeration pass
  Clock::time_point t0 = Clock::now();
  std::map<FamilyMember, SmallGraph> graphs;
  std::map<FamilyMember, MpsEnumeration> enums;
  for (FamilyMember m : kAllMembers) {
    graphs[m] = family_graph(m);
    enums[m] = enumerate_mps(graphs[m]);
  }
  double census_seconds = since(t0);

  {
    const std::map<FamilyMember, long> expected = {
        {FamilyMember::K6, 2},  {FamilyMember::K331, 3}, {FamilyMember::G7, 6},
        {FamilyMember::G8, 14}, {FamilyMember::G9, 10},  {FamilyMember::K44mE, 7},
        {FamilyMember::PG, 2}};
    bool ok = census_seconds < 10.0;
    std::ostringstream note;
    for (FamilyMember m : kAllMembers) {
      long got = (long)enums[m].records.size();
      if (got != expected.at(m)) {
        ok = false;
        note << family_display_name(m) << " has " << got << " orbit records where the table says "
             << expected.at(m) << "; ";
      }
    }
    long two = 0, three = 0;
    for (const auto& r : enums[FamilyMember::G9].records)
      (r.removal.count() == 2 ? two : three) += 1;
    if (two != 6 || three != 4) {
      ok = false;
      note << "G9 splits " << two << "+" << three << " instead of 6+4; ";
    }
    note << "enumeration took " << fmt_seconds(census_seconds) << " (budget 10s)";
    line(1, "record-census", ok, note.str());
  }

  {
    bool ok = true;
    long sets = 0;
    std::string bad;
    for (FamilyMember m : kAllMembers) {
      const SmallGraph& g = graphs[m];
      for (const EdgeSet& removal : enums[m].raw) {
        ++sets;
        SmallGraph h = remove_edge_set(g, removal);
        // the planar part keeps every vertex; positive degrees plus
        // connectivity make each removed edge a chord, hence its own
        // one-edge fragment
        bool spanning = h.n == g.n;
        for (int v = 0; v < h.n; ++v) spanning = spanning && h.degree(v) > 0;
        if (!(is_planar(h) && h.connected() && spanning)) {
          ok = false;
          bad = family_display_name(m);
        }
      }
    }
    std::ostringstream note;
    if (ok)
      note << "all " << sets
           << " minimal deletion sets leave a spanning connected planar part with one-edge fragments";
    else
      note << "structural failure inside " << bad;
    line(2, "mps-structure", ok, note.str());
  }

  {
    Clock::time_point t1 = Clock::now();
    std::ostringstream note;
    TransferCheck apex = verify_mps_transfer(graphs[FamilyMember::K331], {0, 1, 4});
    bool ok = apex.passed;
    note << "K3,3,1 apex triangle " << apex.transferred << "/" << apex.eligible;
    int tri_pass = 0, tri_total = 0;
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b)
        for (int c = b + 1; c < 6; ++c) {
          ++tri_total;
          if (verify_mps_transfer(graphs[FamilyMember::K6], {a, b, c}).passed) ++tri_pass;
        }
    ok = ok && tri_pass == tri_total;
    double s = since(t1);
    ok = ok && s < 5.0;
    note << "; K6 triangles " << tri_pass << "/" << tri_total << "; " << fmt_seconds(s)
         << " (budget 5s)";
    line(3, "triangle-exchange-transfer", ok, note.str());
  }

  // the remaining criteria all read from one full analysis pass
  std::map<FamilyMember, MemberAnalysis> analysis;
  for (FamilyMember m : kAllMembers) analysis[m] = analyze_member(m, /*run_search=*/true);

  {
    bool ok = true;
    std::ostringstream note;
    std::multiset<std::string> k6_shapes;
    for (const auto& r : analysis[FamilyMember::K6].records) k6_shapes.insert(r.shape);
    if (k6_shapes == std::multiset<std::string>{"path", "perfect-matching"}) {
      note << "K6 removes a perfect matching or a three-edge path; ";
    } else {
      ok = false;
      note << "K6 shapes are not {perfect matching, path}: ";
      for (const auto& s : k6_shapes) note << s << " ";
    }
    bool pg_ok = true;
    for (size_t i = 0; i < analysis[FamilyMember::PG].records.size(); ++i) {
      const auto& r = analysis[FamilyMember::PG].records[i];
      if (r.removal.count() != 2) {
        pg_ok = false;
        note << "Petersen record " << i << " removes " << r.removal.count() << " edges ("
             << r.shape << ") where the table says a pair of nonadjacent edges; ";
      } else if (r.shape != "matching") {
        pg_ok = false;
        note << "Petersen record " << i << " removes two adjacent edges; ";
      }
    }
    if (pg_ok) note << "Petersen records each remove a pair of nonadjacent edges";
    ok = ok && pg_ok;
    std::string text = note.str();
    while (!text.empty() && (text.back() == ' ' || text.back() == ';')) text.pop_back();
    line(4, "removal-shapes", ok, text);
  }

  {
    bool ok = true;
    long scenes = 0, configs = 0, linked = 0;
    std::string bad;
    for (FamilyMember m : kAllMembers)
      for (size_t i = 0; i < analysis[m].records.size(); ++i) {
        const auto& r = analysis[m].records[i];
        scenes += r.embedding_class_count;
        configs += r.searched_configs;
        linked += r.linked_configs;
        if (!(r.all_linked && r.searched_configs > 0)) {
          ok = false;
          bad = std::string(family_display_name(m)) + " record " + std::to_string(i);
        }
      }
    std::ostringstream note;
    if (ok)
      note << linked << "/" << configs << " configurations across " << scenes
           << " embedding classes yield a linked cycle pair";
    else
      note << "configuration without a linked pair at " << bad;
    line(5, "linked-pair-everywhere", ok, note.str());
  }

  {
    bool ok = true;
    int digons = 0;
    std::ostringstream note;
    for (size_t i = 0; i < analysis[FamilyMember::G9].records.size(); ++i) {
      const auto& r = analysis[FamilyMember::G9].records[i];
      if (r.removal.count() != 2) continue;
      int neg = 0;
      for (const auto& e : r.conflict.edges) neg += e.negative ? 1 : 0;
      bool digon = r.conflict.fragment_count == 2 && r.conflict.edges.size() == 2 &&
                   neg == 1 && !r.balance.balanced;
      if (digon) {
        ++digons;
      } else {
        ok = false;
        note << "G9 record " << i << " is not an unbalanced digon; ";
      }
    }
    ok = ok && digons == 6;
    if (ok)
      note << "all six two-fragment records carry one conflict and one anti-conflict edge and are unbalanced";
    line(6, "g9-digon-conflicts", ok, note.str());
  }

  {
    std::vector<std::string> balanced;
    bool elsewhere = false;
    for (FamilyMember m : kAllMembers)
      for (size_t i = 0; i < analysis[m].records.size(); ++i)
        if (analysis[m].records[i].balance.balanced) {
          balanced.push_back(std::string(family_display_name(m)) + " record " +
                             std::to_string(i));
          if (m != FamilyMember::K44mE) elsewhere = true;
        }
    bool ok = balanced.size() == 3 && !elsewhere;
    std::ostringstream note;
    if (ok) {
      note << "exactly three balanced conflict graphs, all inside K4,4-e";
    } else {
      note << "found " << balanced.size()
           << " records with verified balance certificates where the table says 3:";
      for (const auto& s : balanced) note << " [" << s << "]";
    }
    line(7, "balance-tally", ok, note.str());
  }

  {
    bool ok = true;
    long records = 0;
    std::string bad;
    for (FamilyMember m : kAllMembers)
      for (size_t i = 0; i < analysis[m].records.size(); ++i) {
        ++records;
        if (!analysis[m].records[i].conflict_uniform) {
          ok = false;
          bad = std::string(family_display_name(m)) + " record " + std::to_string(i);
        }
      }
    std::ostringstream note;
    if (ok)
      note << "signed conflict multigraph identical across embedding classes for all " << records
           << " records";
    else
      note << "conflict graph varies with the embedding at " << bad;
    line(8, "embedding-independence", ok, note.str());
  }

  {
    bool ok = true;
    long scenes = 0;
    std::string where, msg;
    for (int mi = 0; mi < 7 && ok; ++mi) {
      FamilyMember m = kAllMembers[mi];
      for (size_t ri = 0; ri < enums[m].records.size() && ok; ++ri) {
        RecordScenes rs = build_record_scenes(graphs[m], enums[m].records[ri].removal);
        for (size_t si = 0; si < rs.scenes.size() && ok; ++si) {
          ++scenes;
          uint64_t seed = 0xACCE5500u + 9176u * (uint64_t)mi + 131u * (uint64_t)ri + (uint64_t)si;
          if (!verify_scene_invariants(rs.scenes[si], /*reroute_budget=*/120, seed, &msg)) {
            ok = false;
            where = std::string(family_display_name(m)) + " record " + std::to_string(ri) +
                    ": " + msg;
          }
        }
      }
    }
    std::ostringstream note;
    if (ok)
      note << "120 random reroutes per embedding class (" << scenes
           << " classes): side rules, tangle shifts and linking totals all hold";
    else
      note << where;
    line(9, "routing-invariance", ok, note.str());
  }

  {
    bool ok = true;
    long graphs_checked = 0, certs = 0;
    std::ostringstream issues;
    auto agree = [&](const SmallGraph& g, const std::string& what) {
      ++graphs_checked;
      if (is_planar(g) != !has_forbidden_minor(g)) {
        ok = false;
        issues << "planarity tests disagree on " << what << "; ";
      }
    };
    for (FamilyMember m : kAllMembers) {
      agree(graphs[m], family_display_name(m));
      long sum = 0;
      for (const auto& r : enums[m].records) {
        agree(remove_edge_set(graphs[m], r.removal),
              std::string(family_display_name(m)) + " planar part");
        sum += r.orbit_size;
      }
      if (sum != (long)enums[m].raw.size()) {
        ok = false;
        issues << "orbit sizes of " << family_display_name(m) << " do not add up; ";
      }
      for (const auto& r : analysis[m].records) {
        ++certs;
        if (!balance_certificate_ok(r.conflict, r.balance)) {
          ok = false;
          issues << "balance certificate fails re-validation in " << family_display_name(m)
                 << "; ";
        }
      }
    }
    std::ostringstream note;
    if (ok)
      note << "planarity and minor tests agree on " << graphs_checked
           << " graphs, orbit sizes add up, " << certs << " balance certificates re-validate";
    else
      note << issues.str();
    line(10, "cross-checks", ok, note.str());
  }

  std::printf("%d of 10 criteria hold\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
