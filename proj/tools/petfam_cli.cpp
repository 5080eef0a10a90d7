// Command line front end.  Links only the shared C API so it doubles
// as a smoke test for the library boundary.

#include <petfam/petfam.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

// Exit codes: 0 success, 1 negative verification result, 2 usage or
// runtime error.
constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitError = 2;

struct StringOut {
  char* ptr = nullptr;
  ~StringOut() { pf_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

int fail(pf_status st, const std::string& what) {
  std::cerr << "petfam: " << what << ": " << pf_status_message(st) << "\n";
  return kExitError;
}

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
    return kExitOk;
  }
  std::ofstream f(out_path);
  if (!f) {
    std::cerr << "petfam: cannot open " << out_path << " for writing\n";
    return kExitError;
  }
  f << text;
  if (text.empty() || text.back() != '\n') f << "\n";
  return kExitOk;
}

// Display names carry commas and dashes; keep only what a filename
// wants.
std::string file_token(const std::string& display) {
  std::string t;
  for (char c : display)
    if (std::isalnum((unsigned char)c)) t += c;
  return t.empty() ? std::string("graph") : t;
}

using nlohmann::json;

// Plain-text renderings of the JSON reports, for terminal use.

void print_edge_list(std::ostringstream& os, const json& edges) {
  os << "{";
  bool first = true;
  for (const auto& e : edges) {
    if (!first) os << ", ";
    first = false;
    os << e[0].get<std::string>() << "-" << e[1].get<std::string>();
  }
  os << "}";
}

std::string family_text(const json& doc) {
  std::ostringstream os;
  os << "Petersen family (" << doc["members"].size() << " members)\n";
  for (const auto& m : doc["members"]) {
    os << "  " << m["name"].get<std::string>()
       << ": n=" << m["vertices"].get<int>()
       << " m=" << m["edges"].get<int>()
       << " |Aut|=" << m["automorphisms"].get<long>()
       << " planar=" << (m["planar"].get<bool>() ? "yes" : "no")
       << " apex=" << (m["apex"].get<bool>() ? "yes" : "no") << "\n";
  }
  os << "triangle-star exchange closure: " << doc["exchange_closure_size"].get<int>()
     << " isomorphism classes\n";
  return os.str();
}

std::string mps_text(const json& doc) {
  std::ostringstream os;
  os << doc["host"].get<std::string>() << ": "
     << doc["records"].size() << " maximal planar subgraph classes, "
     << doc["raw_total"].get<long>() << " labelled copies\n";
  for (const auto& r : doc["records"]) {
    os << "  record " << r["index"].get<int>() << ": remove ";
    print_edge_list(os, r["removed_edges"]);
    os << "  shape=" << r["shape"].get<std::string>()
       << "  orbit=" << r["orbit_size"].get<int>()
       << "  embeddings=" << r["planar_embedding_count"].get<long>() << "\n";
  }
  return os.str();
}

std::string conflict_text(const json& doc) {
  std::ostringstream os;
  os << doc["host"].get<std::string>() << " conflict graphs\n";
  for (const auto& r : doc["records"]) {
    int neg = 0, pos = 0;
    for (const auto& e : r["edges"])
      (e["sign"].get<std::string>() == "-" ? neg : pos) += 1;
    os << "  record " << r["index"].get<int>() << " ";
    print_edge_list(os, r["removed_edges"]);
    os << ": " << r["fragments"].size() << " fragments, "
       << r["embedding_classes"].get<int>() << " embedding classes, "
       << neg << " conflict / " << pos << " anti-conflict edges, "
       << (r["balanced"].get<bool>() ? "BALANCED" : "unbalanced");
    if (!r["balanced"].get<bool>()) {
      os << " (odd closed walk of " << r["certificate"]["odd_cycle"].size()
         << " edges)";
    }
    os << "\n";
  }
  return os.str();
}

std::string search_text(const json& doc) {
  std::ostringstream os;
  os << doc["host"].get<std::string>() << " linked-pair search\n";
  for (const auto& r : doc["records"]) {
    os << "  record " << r["index"].get<int>() << " ";
    print_edge_list(os, r["removed_edges"]);
    os << ": " << r["embedding_classes"].get<long>() << " embedding classes, "
       << r["linked"].get<long>() << "/" << r["configurations"].get<long>()
       << " configurations with a linked cycle pair"
       << (r["all_linked"].get<bool>() ? "" : "  ** GAP **") << "\n";
    for (const auto& e : r["embeddings"]) {
      os << "    embedding " << e["embedding"].get<int>() << ": "
         << e["linked"].get<long>() << "/" << e["configurations"].get<long>()
         << (e["all_linked"].get<bool>() ? "" : "  ** GAP **") << "\n";
    }
  }
  return os.str();
}

std::string verify_text(const json& doc) {
  std::ostringstream os;
  for (const auto& c : doc["claims"]) {
    os << (c["pass"].get<bool>() ? "PASS" : "FAIL") << "  "
       << c["id"].get<std::string>() << ": "
       << c["detail"].get<std::string>() << "\n";
  }
  os << (doc["passed"].get<bool>() ? "all claims hold" : "SOME CLAIMS FAILED") << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximal planar subgraphs of the Petersen family and their conflict graphs"};
  app.require_subcommand(1);

  std::string member;
  std::string out_path;
  std::string format = "text";
  int jobs = 0;
  int record = -1;
  int embedding_limit = 0;

  auto add_common = [&](CLI::App* cmd, bool needs_member) {
    if (needs_member) {
      cmd->add_option("member", member,
                      "family member (K6, K3,3,1, G7, G8, G9, K4,4-e, Petersen)")
          ->required();
    }
    cmd->add_option("-o,--out", out_path, "output file (default stdout)");
    cmd->add_option("-f,--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
  };

  auto* cmd_family = app.add_subcommand("family", "list the seven family members");
  add_common(cmd_family, false);

  auto* cmd_mps = app.add_subcommand("mps", "enumerate maximal planar subgraphs");
  add_common(cmd_mps, true);

  auto* cmd_conflict = app.add_subcommand(
      "conflict", "build conflict graphs and test balance");
  add_common(cmd_conflict, true);
  cmd_conflict->add_option("-j,--jobs", jobs, "worker threads (0 = hardware)");

  auto* cmd_search = app.add_subcommand(
      "search", "sweep tangle configurations for linked pairs");
  add_common(cmd_search, true);
  cmd_search->add_option("-j,--jobs", jobs, "worker threads (0 = hardware)");
  cmd_search->add_option("-r,--record", record,
                         "record index (default: all records)");
  cmd_search
      ->add_option("--embedding-limit", embedding_limit,
                   "cap embedding classes per record (0 = all)")
      ->check(CLI::NonNegativeNumber);

  auto* cmd_dot = app.add_subcommand("emit-dot",
                                     "write conflict graphs as Graphviz DOT");
  cmd_dot->add_option("member", member, "family member")->required();
  cmd_dot->add_option("-r,--record", record,
                      "record index (default: every record)");
  cmd_dot->add_option("-o,--out", out_path,
                      "output file, or directory when emitting every record");

  auto* cmd_verify = app.add_subcommand("verify", "run the verification battery");
  cmd_verify->add_option("member", member,
                         "scope the battery to one family member (default: all)");
  add_common(cmd_verify, false);
  cmd_verify->add_option("-j,--jobs", jobs, "worker threads (0 = hardware)");
  cmd_verify
      ->add_option("--embedding-limit", embedding_limit,
                   "cap embedding classes per record (0 = all)")
      ->check(CLI::NonNegativeNumber);

  CLI11_PARSE(app, argc, argv);

  StringOut s;
  pf_status st = PF_OK;

  if (app.got_subcommand(cmd_family)) {
    st = pf_family_report_json(&s.ptr);
    if (st != PF_OK) return fail(st, "family");
    return write_output(format == "json" ? s.str() : family_text(json::parse(s.str())),
                        out_path);
  }

  if (app.got_subcommand(cmd_mps)) {
    st = pf_mps_report_json(member.c_str(), &s.ptr);
    if (st != PF_OK) return fail(st, member);
    return write_output(format == "json" ? s.str() : mps_text(json::parse(s.str())),
                        out_path);
  }

  if (app.got_subcommand(cmd_conflict)) {
    st = pf_conflict_report_json(member.c_str(), jobs, &s.ptr);
    if (st != PF_OK) return fail(st, member);
    return write_output(format == "json" ? s.str() : conflict_text(json::parse(s.str())),
                        out_path);
  }

  if (app.got_subcommand(cmd_search)) {
    st = pf_search_report_json(member.c_str(), record, jobs, embedding_limit, &s.ptr);
    if (st != PF_OK) return fail(st, member);
    return write_output(format == "json" ? s.str() : search_text(json::parse(s.str())),
                        out_path);
  }

  if (app.got_subcommand(cmd_dot)) {
    if (record >= 0) {
      st = pf_conflict_dot(member.c_str(), record, &s.ptr);
      if (st != PF_OK) return fail(st, member);
      return write_output(s.str(), out_path);
    }
    // No record selected: emit one drawing per record, either
    // concatenated to stdout or as separate files under a directory.
    StringOut listing;
    st = pf_mps_report_json(member.c_str(), &listing.ptr);
    if (st != PF_OK) return fail(st, member);
    json doc = json::parse(listing.str());
    std::string token = file_token(doc["host"].get<std::string>());
    int count = (int)doc["records"].size();
    bool to_dir = !out_path.empty() && out_path != "-";
    if (to_dir) {
      std::error_code ec;
      std::filesystem::create_directories(out_path, ec);
      if (ec) {
        std::cerr << "petfam: cannot create directory " << out_path << "\n";
        return kExitError;
      }
    }
    std::ostringstream stream;
    for (int i = 0; i < count; ++i) {
      StringOut one;
      st = pf_conflict_dot(member.c_str(), i, &one.ptr);
      if (st != PF_OK) return fail(st, member);
      if (to_dir) {
        std::string path = out_path + "/" + token + "-record-" + std::to_string(i) + ".dot";
        int rc = write_output(one.str(), path);
        if (rc != kExitOk) return rc;
        std::cout << path << "\n";
      } else {
        stream << one.str();
      }
    }
    if (!to_dir) return write_output(stream.str(), "");
    return kExitOk;
  }

  if (app.got_subcommand(cmd_verify)) {
    int passed = 0;
    st = pf_verify_json(member.empty() ? nullptr : member.c_str(), jobs,
                        embedding_limit, &passed, &s.ptr);
    if (st != PF_OK) return fail(st, member.empty() ? "verify" : member);
    int rc = write_output(format == "json" ? s.str() : verify_text(json::parse(s.str())),
                          out_path);
    if (rc != kExitOk) return rc;
    return passed ? kExitOk : kExitCheckFailed;
  }

  return kExitError;
}
