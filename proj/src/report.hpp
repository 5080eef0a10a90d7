#pragma once

#include "pipeline.hpp"

#include <optional>
#include <string>

namespace petfam {

std::string family_report_json();
std::string mps_report_json(FamilyMember m);
std::string conflict_report_json(FamilyMember m, int jobs);

// record_index < 0 sweeps every record of the member.  embedding_limit
// caps how many embedding classes each record explores; 0 means all.
std::string search_report_json(FamilyMember m, int record_index, int jobs,
                               int embedding_limit = 0);

// Runs the claim battery and renders one claim per line item; sets
// all_passed accordingly.  When `only` holds a member the battery is
// scoped to it and claims about other members are dropped.  The output
// is deterministic: identical arguments give identical bytes.
std::string verify_report_json(std::optional<FamilyMember> only, int jobs,
                               int embedding_limit, bool& all_passed);

// Graphviz rendering of one record's conflict graph: solid edges for
// conflicts, dashed for anti-conflicts.
std::string conflict_dot(FamilyMember m, int record_index);

}  // namespace petfam
