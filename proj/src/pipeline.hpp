#pragma once

#include "conflict.hpp"
#include "family.hpp"
#include "mps.hpp"

namespace petfam {

// Embedding classes of the planar part, deduplicated by the subgroup
// of its automorphisms that fixes the removal set: only those carry
// fragment data across, so coarser deduplication could conflate scenes
// that differ for the arcs.
std::vector<Permutation> removal_stabilizer(const SmallGraph& planar_part,
                                            const std::vector<Edge>& fragments);

struct RecordScenes {
  std::vector<FlatScene> scenes;      // one per embedding class
  std::vector<long> class_raw_counts; // rotation systems per class
};

// embedding_limit > 0 keeps only that many embedding classes, a
// speed valve for exploratory runs; 0 means all of them.
RecordScenes build_record_scenes(const SmallGraph& g, const EdgeSet& removal,
                                 int embedding_limit = 0);

struct RecordAnalysis {
  EdgeSet removal;
  long orbit_size = 0;
  std::string shape;
  int fragment_count = 0;
  bool planar_part_connected = false;
  bool planar_part_spanning = false;

  int embedding_class_count = 0;
  ConflictGraph conflict;        // from the first scene
  bool conflict_uniform = false; // identical across scenes
  BalanceResult balance;

  long configs_per_scene = 0;
  long searched_configs = 0;  // scenes x configurations, when searched
  long linked_configs = 0;    // of those, with an odd cycle pair
  bool all_linked = false;
};

// Full analysis of one removal record.  run_search controls the
// configuration sweep, the expensive part.
RecordAnalysis analyze_record(const SmallGraph& g, const MpsRecord& rec, bool run_search,
                              int embedding_limit = 0);

struct MemberAnalysis {
  FamilyMember member;
  MpsEnumeration mps;
  std::vector<RecordAnalysis> records;
};

MemberAnalysis analyze_member(FamilyMember member, bool run_search, int jobs = 1,
                              int embedding_limit = 0);

// Exercises the diagram model on one scene.  Checks, in order:
//  - the configuration list has the predicted size;
//  - crossing parity of each arc against each embedded cycle equals
//    the separation parity of the arc's endpoints (when off the cycle);
//  - for disjoint single-fragment cycle pairs, the two base parities
//    differ exactly by the arcs' mutual crossing parity;
//  - a cycle whose lone fragment sits Below never passes over a cycle
//    whose lone fragment sits Above;
//  - a cycle through exactly two fragments, against a fragment-free
//    cycle, has parity zero when the fragments share a side and the
//    endpoint separation parity when they do not;
//  - coherent configurations give symmetric linking parities, and
//    their total over disjoint pairs is odd;
//  - flipping one tangle bit flips exactly the parities it sits in;
//  - rerouting any arc, with the tangle transported along, preserves
//    every linking parity (reroute_budget random reroutes).
// Returns false with a message on the first violation.
bool verify_scene_invariants(const FlatScene& scene, int reroute_budget, uint64_t seed,
                             std::string* message);

}  // namespace petfam
