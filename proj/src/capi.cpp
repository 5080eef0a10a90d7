#include "petfam/petfam.h"

#include "family.hpp"
#include "minor.hpp"
#include "report.hpp"

#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>

using namespace petfam;

struct pf_graph {
  SmallGraph g;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Maps C++ failures onto status codes at the boundary; everything
// inside the library throws.
template <typename Fn>
pf_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument&) {
    return PF_ERROR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    return PF_ERROR_INTERNAL;
  } catch (const std::exception&) {
    return PF_ERROR_INTERNAL;
  }
}

pf_status require(bool cond, pf_status bad = PF_ERROR_INVALID_ARGUMENT) {
  return cond ? PF_OK : bad;
}

pf_status parse_member(const char* name, FamilyMember* out) {
  if (!name) return PF_ERROR_INVALID_ARGUMENT;
  auto m = family_from_name(name);
  if (!m) return PF_ERROR_UNKNOWN_FAMILY;
  *out = *m;
  return PF_OK;
}

}  // namespace

extern "C" {

const char* pf_version(void) { return "1.0.0"; }

const char* pf_status_message(pf_status status) {
  switch (status) {
    case PF_OK: return "ok";
    case PF_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case PF_ERROR_UNKNOWN_FAMILY: return "unknown family member name";
    case PF_ERROR_PARSE: return "malformed graph text";
    case PF_ERROR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void pf_string_free(char* s) { delete[] s; }

pf_status pf_graph_parse(const char* text, pf_graph** out) {
  if (!text || !out) return PF_ERROR_INVALID_ARGUMENT;
  *out = nullptr;
  try {
    auto* h = new pf_graph{parse_graph_text(text)};
    *out = h;
    return PF_OK;
  } catch (const std::invalid_argument&) {
    return PF_ERROR_PARSE;
  } catch (...) {
    return PF_ERROR_INTERNAL;
  }
}

pf_status pf_graph_family(const char* name, pf_graph** out) {
  if (!out) return PF_ERROR_INVALID_ARGUMENT;
  *out = nullptr;
  FamilyMember m;
  pf_status st = parse_member(name, &m);
  if (st != PF_OK) return st;
  return guarded([&] {
    *out = new pf_graph{family_graph(m)};
    return PF_OK;
  });
}

pf_status pf_graph_build(int vertex_count, const int* edges, int edge_count,
                         pf_graph** out) {
  if (!out || (edge_count > 0 && !edges) || edge_count < 0) return PF_ERROR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    std::vector<std::pair<int, int>> list;
    for (int i = 0; i < edge_count; ++i) list.push_back({edges[2 * i], edges[2 * i + 1]});
    *out = new pf_graph{build_graph(vertex_count, list)};
    return PF_OK;
  });
}

void pf_graph_free(pf_graph* g) { delete g; }

pf_status pf_graph_format(const pf_graph* g, int with_labels, char** out) {
  if (!g || !out) return PF_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = dup_string(format_graph_text(g->g, with_labels != 0));
    return require(*out != nullptr, PF_ERROR_INTERNAL);
  });
}

pf_status pf_graph_vertex_count(const pf_graph* g, int* out) {
  if (!g || !out) return PF_ERROR_INVALID_ARGUMENT;
  *out = g->g.n;
  return PF_OK;
}

pf_status pf_graph_edge_count(const pf_graph* g, int* out) {
  if (!g || !out) return PF_ERROR_INVALID_ARGUMENT;
  *out = g->g.edge_count();
  return PF_OK;
}

pf_status pf_graph_is_planar(const pf_graph* g, int* out) {
  if (!g || !out) return PF_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = is_planar(g->g) ? 1 : 0;
    return PF_OK;
  });
}

pf_status pf_graph_is_apex(const pf_graph* g, int* out) {
  if (!g || !out) return PF_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = is_apex(g->g) ? 1 : 0;
    return PF_OK;
  });
}

pf_status pf_graph_automorphism_count(const pf_graph* g, long* out) {
  if (!g || !out) return PF_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = (long)automorphism_group(g->g).size();
    return PF_OK;
  });
}

pf_status pf_graph_identify_family(const pf_graph* g, char** name_out) {
  if (!g || !name_out) return PF_ERROR_INVALID_ARGUMENT;
  *name_out = nullptr;
  return guarded([&] {
    auto m = identify_family(g->g);
    if (!m) return PF_ERROR_UNKNOWN_FAMILY;
    *name_out = dup_string(family_display_name(*m));
    return require(*name_out != nullptr, PF_ERROR_INTERNAL);
  });
}

pf_status pf_family_report_json(char** out) {
  if (!out) return PF_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = dup_string(family_report_json());
    return require(*out != nullptr, PF_ERROR_INTERNAL);
  });
}

pf_status pf_mps_report_json(const char* member, char** out) {
  if (!out) return PF_ERROR_INVALID_ARGUMENT;
  FamilyMember m;
  pf_status st = parse_member(member, &m);
  if (st != PF_OK) return st;
  return guarded([&] {
    *out = dup_string(mps_report_json(m));
    return require(*out != nullptr, PF_ERROR_INTERNAL);
  });
}

pf_status pf_conflict_report_json(const char* member, int jobs, char** out) {
  if (!out) return PF_ERROR_INVALID_ARGUMENT;
  FamilyMember m;
  pf_status st = parse_member(member, &m);
  if (st != PF_OK) return st;
  return guarded([&] {
    *out = dup_string(conflict_report_json(m, jobs));
    return require(*out != nullptr, PF_ERROR_INTERNAL);
  });
}

pf_status pf_search_report_json(const char* member, int record_index, int jobs,
                                int embedding_limit, char** out) {
  if (!out || embedding_limit < 0) return PF_ERROR_INVALID_ARGUMENT;
  FamilyMember m;
  pf_status st = parse_member(member, &m);
  if (st != PF_OK) return st;
  return guarded([&] {
    *out = dup_string(search_report_json(m, record_index, jobs, embedding_limit));
    return require(*out != nullptr, PF_ERROR_INTERNAL);
  });
}

pf_status pf_conflict_dot(const char* member, int record_index, char** out) {
  if (!out) return PF_ERROR_INVALID_ARGUMENT;
  FamilyMember m;
  pf_status st = parse_member(member, &m);
  if (st != PF_OK) return st;
  return guarded([&] {
    *out = dup_string(conflict_dot(m, record_index));
    return require(*out != nullptr, PF_ERROR_INTERNAL);
  });
}

pf_status pf_verify_json(const char* member, int jobs, int embedding_limit,
                         int* passed, char** out) {
  if (!out || !passed || embedding_limit < 0) return PF_ERROR_INVALID_ARGUMENT;
  std::optional<FamilyMember> only;
  if (member) {
    FamilyMember m;
    pf_status st = parse_member(member, &m);
    if (st != PF_OK) return st;
    only = m;
  }
  return guarded([&] {
    bool ok = false;
    *out = dup_string(verify_report_json(only, jobs, embedding_limit, ok));
    *passed = ok ? 1 : 0;
    return require(*out != nullptr, PF_ERROR_INTERNAL);
  });
}

}  // extern "C"
