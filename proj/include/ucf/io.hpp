#pragma once

// Text and structured serialization.
//
// Family text format (shared by every tool here): one set per line,
// elements as 1-based decimal integers separated by spaces; blank lines and
// `#` comments are ignored; the first content line may be `universe n`,
// otherwise the universe size is the largest element seen.  parse and
// format round-trip bit-exactly.
//
// Structured output is JSON, one document per report, each carrying a
// schema_version field so downstream scripts do not have to scrape text.

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ucf/analysis.hpp"
#include "ucf/classification.hpp"
#include "ucf/closure.hpp"
#include "ucf/relative.hpp"
#include "ucf/set_family.hpp"

namespace ucf {

inline constexpr int kReportSchemaVersion = 1;

// ---------------------------------------------------------------------------
// Family text format
// ---------------------------------------------------------------------------

/// One member per line, ascending mask order, with an explicit universe line.
inline std::string format_family(const SetFamily& f) {
  std::string out = "universe " + std::to_string(f.universe()) + "\n";
  for (Mask m : f.members()) {
    bool first = true;
    for (int e : elements_of(m)) {
      if (!first) out += ' ';
      out += std::to_string(e);
      first = false;
    }
    out += '\n';
  }
  return out;
}

inline SetFamily parse_family(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int universe = 0;
  bool saw_content = false;
  std::vector<Mask> sets;
  auto fail = [&](const std::string& what) {
    throw Error(Errc::ParseError,
                "line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream fields(line);
    std::string token;
    if (!(fields >> token)) continue;  // blank or comment-only
    if (!saw_content && token == "universe") {
      long n = 0;
      if (!(fields >> n) || n < 1 || n > kMaxUniverse)
        fail("universe size must be between 1 and 32");
      if (fields >> token) fail("trailing content after universe size");
      universe = static_cast<int>(n);
      saw_content = true;
      continue;
    }
    saw_content = true;
    Mask m = 0;
    do {
      long element = 0;
      try {
        std::size_t used = 0;
        element = std::stol(token, &used);
        if (used != token.size()) fail("bad element '" + token + "'");
      } catch (const std::exception&) {
        fail("bad element '" + token + "'");
      }
      if (element < 1) fail("elements are 1-based, got " + token);
      if (element > kMaxUniverse) fail("element " + token + " exceeds 32");
      if (universe != 0 && element > universe)
        fail("element " + token + " exceeds the declared universe");
      m = with_element(m, static_cast<int>(element));
    } while (fields >> token);
    sets.push_back(m);
  }
  if (sets.empty())
    throw Error(Errc::ParseError, "no sets in input");
  if (universe == 0) {
    for (Mask m : sets) universe = std::max(universe, max_element(m));
  }
  return make_family(universe, std::move(sets));
}

inline SetFamily parse_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_family(buffer.str());
}

/// Trace as stacked families separated by `--- level i` markers.
inline std::string format_trace(const ClosureTrace& trace) {
  std::string out;
  for (std::size_t i = 0; i < trace.levels.size(); ++i) {
    out += "--- level " + std::to_string(i) + "\n";
    out += format_family(trace.levels[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON reports
// ---------------------------------------------------------------------------

using Json = nlohmann::json;

inline Json report_shell(const std::string& kind) {
  return Json{{"schema_version", kReportSchemaVersion}, {"kind", kind}};
}

inline Json sets_json(const std::vector<Mask>& sets) {
  Json out = Json::array();
  for (Mask m : sets) out.push_back(elements_of(m));
  return out;
}

inline Json family_json(const SetFamily& f) {
  return Json{{"universe", f.universe()},
              {"size", f.size()},
              {"members", sets_json(f.members())}};
}

inline Json family_report(const SetFamily& f) {
  Json out = report_shell("family");
  out["family"] = family_json(f);
  return out;
}

/// Density, level sizes, and (for n <= 10) the member lists per level.
inline Json trace_report(const ClosureTrace& trace) {
  Json out = report_shell("closure_trace");
  out["universe"] = trace.levels.front().universe();
  out["density"] = trace.density();
  Json sizes = Json::array();
  for (const SetFamily& level : trace.levels) sizes.push_back(level.size());
  out["level_sizes"] = sizes;
  if (trace.levels.front().universe() <= 10) {
    Json levels = Json::array();
    for (const SetFamily& level : trace.levels)
      levels.push_back(sets_json(level.members()));
    out["levels"] = levels;
  }
  return out;
}

inline Json density_report_json(const DensityReport& report) {
  Json out = report_shell("density");
  out["density"] = report.density;
  out["s_param"] = report.s_param;
  out["lower_bound"] = report.lower_bound;
  out["bound_tight"] = report.bound_tight;
  return out;
}

inline Json root_report(const RootCertificate& cert) {
  Json out = report_shell("closure_root");
  out["family"] = family_json(cert.input);
  out["generating_set"] = sets_json(cert.generating_set);
  out["relative_generated"] = family_json(cert.relative_generated);
  out["closure_of_generated"] = family_json(cert.closure_of_generated);
  out["has_root"] = cert.has_root;
  if (cert.witness_root) out["witness_root"] = family_json(*cert.witness_root);
  return out;
}

inline Json ratio_json(const Ratio& r) {
  return Json{{"numerator", r.numerator()}, {"denominator", r.denominator()}};
}

inline Json frankl_report(const FranklResult& r, const SetFamily& f) {
  Json out = report_shell("frankl");
  out["family_size"] = f.size();
  out["element"] = r.element;
  out["count"] = r.count;
  out["satisfied"] = r.satisfied;
  return out;
}

inline Json census_report(const DensityCensus& census) {
  Json out = report_shell("density_census");
  out["universe"] = census.n;
  out["total"] = census.total;
  auto dump = [](const std::map<int, std::uint64_t>& counts) {
    Json obj = Json::object();
    for (const auto& [k, v] : counts) obj[std::to_string(k)] = v;
    return obj;
  };
  out["labelled_counts"] = dump(census.labelled_counts);
  out["iso_counts"] = dump(census.iso_counts);
  out["leaf_counts"] = dump(census.leaf_counts);
  Json a_table = Json::object();
  for (const auto& [k, v] : census.a_values)
    a_table[std::to_string(k)] = ratio_json(v);
  out["a_values"] = a_table;
  out["f_values"] = census.f_values;
  return out;
}

inline std::string tree_edge_list(const ClosureTree& tree) {
  std::string out;
  for (std::size_t i = 0; i < tree.parent.size(); ++i) {
    out += std::to_string(i) + " " + std::to_string(tree.parent[i]) + "\n";
  }
  return out;
}

inline Json tree_report(const ClosureTree& tree) {
  Json out = report_shell("closure_tree");
  out["universe"] = tree.n;
  out["node_count"] = tree.nodes.size();
  out["root"] = tree.root;
  out["depth"] = tree.depth;
  out["leaves"] = tree.leaves;
  Json nodes = Json::array();
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    nodes.push_back(Json{{"id", i},
                         {"density", 0},  // filled below
                         {"members", sets_json(tree.nodes[i].members())}});
  }
  // density is recoverable from the parent chain length to the root
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    int d = 0;
    for (int at = static_cast<int>(i); at != tree.root;
         at = tree.parent[static_cast<std::size_t>(at)])
      ++d;
    nodes[i]["density"] = d;
  }
  out["nodes"] = nodes;
  Json edges = Json::array();
  for (std::size_t i = 0; i < tree.parent.size(); ++i)
    edges.push_back(Json::array({i, tree.parent[i]}));
  out["edges"] = edges;
  return out;
}

inline Json case_report_json(const CaseReport& r) {
  return Json{{"subject", elements_of(r.subject)},
              {"level", r.level},
              {"case", r.case_label()},
              {"matched_cases", r.matched_cases},
              {"predicted_member", r.predicted_member},
              {"computed_member", r.computed_member},
              {"agrees", r.agrees}};
}

}  // namespace ucf
