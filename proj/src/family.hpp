#pragma once

#include "smallgraph.hpp"

#include <optional>

namespace petfam {

// The seven graphs reachable from K6 by triangle-star exchanges.
enum class FamilyMember { K6, K331, G7, G8, G9, K44mE, PG };

inline constexpr FamilyMember kAllMembers[] = {
    FamilyMember::K6,   FamilyMember::K331, FamilyMember::G7, FamilyMember::G8,
    FamilyMember::G9,   FamilyMember::K44mE, FamilyMember::PG};

const char* family_display_name(FamilyMember m);

// Accepts the display name plus common alternate spellings
// ("K331", "K4,4-e", "K44me", "Petersen", case-insensitive).
std::optional<FamilyMember> family_from_name(const std::string& name);

SmallGraph family_graph(FamilyMember m);

std::optional<FamilyMember> identify_family(const SmallGraph& g);

// Isomorphism classes reachable from the seed by applying
// delta_to_wye at every triangle and wye_to_delta at every degree-3
// vertex, repeatedly.
std::vector<SmallGraph> wye_delta_closure(const SmallGraph& seed);

}  // namespace petfam
