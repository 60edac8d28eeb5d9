// Command-line front end for the union-closed family library.
//
// Families come from a file in the plain text format or from a named
// construction given inline; every subcommand can emit either text or a
// JSON report.  Exit codes: 0 success, 1 validation error, 2 verification
// failure, 64 usage error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ucf/ucf.hpp"

namespace {

struct FamilySource {
  std::string input_path;
  std::string construct_kind;
  int n = 0;
  int k = 0;
  int c = 0;
  std::vector<std::string> generators;
  std::string base_path;
};

void add_family_options(CLI::App* cmd, FamilySource& src) {
  auto* input = cmd->add_option("--input,-i", src.input_path,
                                "family file in the text format");
  auto* kind = cmd->add_option(
      "--construct", src.construct_kind,
      "inline construction: chain|path|path-upset|prefix-upset|bound-gap|"
      "interval-chain|cube-plus-universe|power-set|up-set|lifted");
  cmd->add_option("--n", src.n, "universe size for --construct");
  cmd->add_option("--k", src.k, "k parameter (interval-chain, prefix-upset)");
  cmd->add_option("--c", src.c, "c parameter (interval-chain)");
  cmd->add_option("--gen", src.generators,
                  "generator set for --construct up-set, e.g. --gen \"1 2\"");
  cmd->add_option("--base", src.base_path,
                  "base family file for --construct lifted");
  input->excludes(kind);
}

ucf::Mask parse_generator(const std::string& text) {
  std::istringstream in(text);
  ucf::Mask m = 0;
  int element = 0;
  while (in >> element) {
    if (element < 1 || element > ucf::kMaxUniverse)
      throw ucf::Error(ucf::Errc::ParseError,
                       "generator element out of range: " + text);
    m = ucf::with_element(m, element);
  }
  if (m == 0)
    throw ucf::Error(ucf::Errc::ParseError, "empty generator: '" + text + "'");
  return m;
}

ucf::SetFamily build_from_kind(const FamilySource& src) {
  using ucf::ConstructionKind;
  ucf::ConstructionSpec spec;
  spec.n = src.n;
  spec.k = src.k;
  spec.c = src.c;
  const std::string& kind = src.construct_kind;
  if (kind == "chain") {
    spec.kind = ConstructionKind::Chain;
  } else if (kind == "path") {
    spec.kind = ConstructionKind::Path;
  } else if (kind == "bound-gap") {
    spec.kind = ConstructionKind::BoundGap;
  } else if (kind == "interval-chain") {
    spec.kind = ConstructionKind::IntervalChain;
  } else if (kind == "cube-plus-universe") {
    spec.kind = ConstructionKind::CubePlusUniverse;
  } else if (kind == "power-set") {
    spec.kind = ConstructionKind::PowerSet;
  } else if (kind == "path-upset") {
    spec.kind = ConstructionKind::UpSet;
    spec.generators = ucf::adjacent_pair_generators(src.n);
  } else if (kind == "prefix-upset") {
    if (src.k < 1)
      throw ucf::Error(ucf::Errc::InvalidParameter, "prefix-upset needs --k");
    spec.kind = ConstructionKind::UpSet;
    spec.generators = {ucf::prefix_mask(src.k)};
  } else if (kind == "up-set") {
    spec.kind = ConstructionKind::UpSet;
    for (const std::string& g : src.generators)
      spec.generators.push_back(parse_generator(g));
  } else if (kind == "lifted") {
    if (src.base_path.empty())
      throw ucf::Error(ucf::Errc::InvalidParameter, "lifted needs --base FILE");
    spec.kind = ConstructionKind::Lifted;
    spec.base = ucf::parse_family_file(src.base_path);
  } else {
    throw ucf::Error(ucf::Errc::InvalidParameter,
                     "unknown construction '" + kind + "'");
  }
  return ucf::build_construction(spec).family;
}

ucf::SetFamily resolve_family(const FamilySource& src) {
  if (!src.input_path.empty() && !src.construct_kind.empty())
    throw ucf::Error(ucf::Errc::InvalidParameter,
                     "give either --input or --construct, not both");
  if (!src.input_path.empty()) return ucf::parse_family_file(src.input_path);
  if (!src.construct_kind.empty()) return build_from_kind(src);
  throw ucf::Error(ucf::Errc::InvalidParameter,
                   "a family is required: --input FILE or --construct KIND");
}

bool g_json = false;

void emit(const ucf::Json& report, const std::string& text) {
  if (g_json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << text;
}

// ---------------------------------------------------------------------------
// verification sweeps
// ---------------------------------------------------------------------------

int checks_run = 0;

void check(bool ok, const std::string& what) {
  ++checks_run;
  std::cout << (ok ? "PASS " : "FAIL ") << what << "\n";
  if (!ok)
    throw ucf::Error(ucf::Errc::DisagreementFound, what);
}

/// Closure laws over every union-closed family at n <= cap (cap <= 4).
void run_law_sweep(int max_n) {
  using namespace ucf;
  const int cap = std::min(max_n, kMaxEnumerationUniverse);
  for (int n = 1; n <= cap; ++n) {
    std::uint64_t families = 0;
    bool closed = true, strict = true, depth = true, levels = true,
         chain_bound = true, up_set_iff = true;
    for_each_union_closed(n, [&](const SetFamily& f) {
      ++families;
      const ClosureTrace trace = closure_trace(f);
      const int d = trace.density();
      for (const SetFamily& level : trace.levels)
        closed = closed && is_union_closed(level);
      strict = strict && ((f == trace.level(1)) == f.is_power_set());
      for (std::size_t i = 0; i + 1 < trace.levels.size(); ++i)
        strict = strict && trace.levels[i].subfamily_of(trace.levels[i + 1]) &&
                 trace.levels[i].size() < trace.levels[i + 1].size();
      depth = depth && d <= n - 1;
      for (int k = 0; k <= n - 1; ++k)
        levels = levels && min_full_level(trace.level(k)) <= n - k;
      chain_bound = chain_bound && (f.is_power_set() || s_param(f) < d);
      up_set_iff = up_set_iff && ((d == 1) == (is_up_set(f) && !f.is_power_set()));
      return true;
    });
    check(closed, "laws n=" + std::to_string(n) + ": every closure level is "
                  "union-closed (" + std::to_string(families) + " families)");
    check(strict, "laws n=" + std::to_string(n) + ": closure grows strictly "
                  "below the power set");
    check(depth, "laws n=" + std::to_string(n) + ": density <= n-1");
    check(levels, "laws n=" + std::to_string(n) + ": k-th closure holds all "
                  "sets of size n-k");
    check(chain_bound, "laws n=" + std::to_string(n) + ": s(F) < density "
                       "below the power set");
    check(up_set_iff, "laws n=" + std::to_string(n) + ": 1-dense iff proper "
                      "up-set");
  }
}

/// Six-case lift sweep over every union-closed base with k <= 3.
void run_lift_sweep(int max_n) {
  using namespace ucf;
  for (int k = 1; k <= 3; ++k) {
    std::uint64_t swept = 0;
    for (int n = k + 2; n <= std::min(k + 4, max_n); ++n) {
      for_each_union_closed(k, [&](const SetFamily& base) {
        verify_lift(base, n);
        ++swept;
        return true;
      });
    }
    check(true, "lift sweep k=" + std::to_string(k) + ": " +
                    std::to_string(swept) + " (base, n) pairs, all "
                    "predictions match");
  }
}

/// Fourteen-case path sweep for 6 <= n <= max_n.
void run_path_sweep(int max_n, std::optional<int> max_k) {
  using namespace ucf;
  for (int n = 6; n <= std::min(max_n, 9); ++n) {
    const auto reports = verify_path(n, max_k);
    check(true, "path sweep n=" + std::to_string(n) + ": " +
                    std::to_string(reports.size()) +
                    " classified subsets, all predictions match");
  }
}

int run_verify(const std::string& target, int max_n, std::optional<int> max_k) {
  try {
    if (target == "laws" || target == "all") run_law_sweep(max_n);
    if (target == "lift" || target == "sec3" || target == "all")
      run_lift_sweep(max_n);
    if (target == "path" || target == "sec4" || target == "all")
      run_path_sweep(max_n, max_k);
  } catch (const ucf::DisagreementError& e) {
    std::cout << "FAIL " << e.what() << "\n";
    for (const ucf::CaseReport& r : e.sample())
      std::cout << "  " << ucf::case_report_json(r).dump() << "\n";
    return 2;
  } catch (const ucf::Error& e) {
    if (e.code() == ucf::Errc::DisagreementFound) {
      std::cout << "FAIL " << e.what() << "\n";
      return 2;
    }
    throw;
  }
  std::cout << "verified: " << checks_run << " checks passed\n";
  return 0;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"union-closed set family toolkit"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "worker cap for closure scans")
      ->capture_default_str();
  app.add_flag("--json", g_json, "emit JSON reports instead of text");

  FamilySource src;
  std::string format = "text";

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "text | structured (json)")
        ->check(CLI::IsMember({"text", "json", "structured"}));
  };

  auto* cmd_closure = app.add_subcommand("closure", "one closure step");
  add_family_options(cmd_closure, src);
  add_format(cmd_closure);

  auto* cmd_trace = app.add_subcommand("trace", "iterated closures up to the power set");
  add_family_options(cmd_trace, src);
  add_format(cmd_trace);
  int trace_level = -1;
  cmd_trace->add_option("--level", trace_level, "emit one level only");

  auto* cmd_density = app.add_subcommand("density", "density, s parameter, bound tightness");
  add_family_options(cmd_density, src);
  add_format(cmd_density);

  auto* cmd_s = app.add_subcommand("s-param", "longest capped member chain");
  add_family_options(cmd_s, src);
  add_format(cmd_s);

  auto* cmd_root = app.add_subcommand("root", "closure-root test for a 1-dense family");
  add_family_options(cmd_root, src);
  add_format(cmd_root);
  bool root_brute = false;
  std::size_t root_cap = ucf::kDefaultRootSearchMemberCap;
  cmd_root->add_flag("--brute", root_brute, "cross-check with the exhaustive search");
  cmd_root->add_option("--member-cap", root_cap, "size cap for --brute");

  auto* cmd_construct = app.add_subcommand("construct", "emit a named family");
  std::string construct_kind;
  cmd_construct->add_option("kind", construct_kind, "construction name")->required();
  cmd_construct->add_option("--n", src.n, "universe size");
  cmd_construct->add_option("--k", src.k, "k parameter");
  cmd_construct->add_option("--c", src.c, "c parameter");
  cmd_construct->add_option("--gen", src.generators, "generators for up-set");
  cmd_construct->add_option("--base", src.base_path, "base family for lifted");
  add_format(cmd_construct);

  auto* cmd_census = app.add_subcommand("census", "density census by exhaustive enumeration");
  int census_n = 3;
  cmd_census->add_option("--n", census_n, "universe size (<= 4)")->required();
  add_format(cmd_census);

  auto* cmd_tree = app.add_subcommand("tree", "closure tree over all union-closed families");
  int tree_n = 3;
  cmd_tree->add_option("--n", tree_n, "universe size (<= 4)")->required();
  add_format(cmd_tree);

  auto* cmd_frankl = app.add_subcommand("frankl", "maximum element frequency check");
  add_family_options(cmd_frankl, src);
  add_format(cmd_frankl);
  bool strict_half = false;
  cmd_frankl->add_flag("--strict-half", strict_half,
                       "require 2*count >= |F| instead of count >= floor(|F|/2)");

  auto* cmd_iso = app.add_subcommand("iso", "canonical form under relabeling");
  add_family_options(cmd_iso, src);
  add_format(cmd_iso);

  auto* cmd_verify = app.add_subcommand(
      "verify-paper", "run the verification sweeps (laws, lift, path)");
  std::string verify_target = "all";
  cmd_verify->add_option("target", verify_target,
                         "laws | lift | path | all (sec3/sec4 are aliases)")
      ->check(CLI::IsMember({"laws", "lift", "path", "all", "sec3", "sec4"}));
  bool verify_all = false;
  cmd_verify->add_flag("--all", verify_all, "run every sweep");
  int verify_max_n = 6;
  cmd_verify->add_option("--max-n", verify_max_n, "largest universe to sweep")
      ->capture_default_str();
  int verify_max_k = -1;
  cmd_verify->add_option("--max-k", verify_max_k, "depth cap for the path sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  ucf::runtime::set_max_threads(threads);
  if (format == "json" || format == "structured") g_json = true;

  try {
    if (*cmd_closure) {
      const ucf::SetFamily f = resolve_family(src);
      const ucf::SetFamily result = ucf::closure(f);
      emit(ucf::family_report(result), ucf::format_family(result));
    } else if (*cmd_trace) {
      const ucf::SetFamily f = resolve_family(src);
      const ucf::ClosureTrace trace = ucf::closure_trace(f);
      if (trace_level >= 0) {
        const ucf::SetFamily& level = trace.level(trace_level);
        emit(ucf::family_report(level), ucf::format_family(level));
      } else {
        emit(ucf::trace_report(trace), ucf::format_trace(trace));
      }
    } else if (*cmd_density) {
      const ucf::DensityReport report = ucf::density_report(resolve_family(src));
      emit(ucf::density_report_json(report),
           "density=" + std::to_string(report.density) +
               " s=" + std::to_string(report.s_param) +
               " bound_tight=" + bool_str(report.bound_tight) + "\n");
    } else if (*cmd_s) {
      const int s = ucf::s_param(resolve_family(src));
      ucf::Json j = ucf::report_shell("s_param");
      j["s_param"] = s;
      emit(j, "s=" + std::to_string(s) + "\n");
    } else if (*cmd_root) {
      const ucf::SetFamily f = resolve_family(src);
      const ucf::RootCertificate cert = ucf::has_closure_root(f);
      if (root_brute) {
        const auto roots = ucf::brute_force_closure_roots(f, root_cap);
        if (roots.empty() == cert.has_root)
          throw ucf::Error(ucf::Errc::DisagreementFound,
                           "exhaustive root search disagrees with the "
                           "relative-generation test");
      }
      std::string text = "has_root=" + bool_str(cert.has_root) + "\n";
      text += "--- generating-set\n";
      text += ucf::format_family(ucf::make_family(
          f.universe(), [&] {
            auto g = cert.generating_set;
            g.push_back(f.full());
            return g;
          }()));
      text += "--- relative-generated\n";
      text += ucf::format_family(cert.relative_generated);
      text += "--- closure-of-generated\n";
      text += ucf::format_family(cert.closure_of_generated);
      emit(ucf::root_report(cert), text);
    } else if (*cmd_construct) {
      src.construct_kind = construct_kind;
      const ucf::SetFamily f = build_from_kind(src);
      emit(ucf::family_report(f), ucf::format_family(f));
    } else if (*cmd_census) {
      const ucf::DensityCensus census = ucf::density_census(census_n);
      std::string text = "universe=" + std::to_string(census.n) +
                         " total=" + std::to_string(census.total) + "\n";
      for (const auto& [d, count] : census.labelled_counts) {
        const ucf::Ratio a = census.a_values.at(d);
        text += "density " + std::to_string(d) + ": labelled " +
                std::to_string(count) + " iso " +
                std::to_string(census.iso_counts.at(d)) + " leaves " +
                std::to_string(census.leaf_counts.count(d)
                                   ? census.leaf_counts.at(d)
                                   : 0) +
                " min_g " + std::to_string(a.numerator()) + "/" +
                std::to_string(a.denominator()) + "\n";
      }
      text += "f:";
      for (std::uint64_t v : census.f_values) text += " " + std::to_string(v);
      text += "\n";
      emit(ucf::census_report(census), text);
    } else if (*cmd_tree) {
      const ucf::ClosureTree tree = ucf::closure_tree(tree_n);
      std::string text = "# closure tree: n=" + std::to_string(tree.n) +
                         " nodes=" + std::to_string(tree.nodes.size()) +
                         " root=" + std::to_string(tree.root) +
                         " depth=" + std::to_string(tree.depth) + "\n";
      text += ucf::tree_edge_list(tree);
      emit(ucf::tree_report(tree), text);
    } else if (*cmd_frankl) {
      const ucf::SetFamily f = resolve_family(src);
      const ucf::FranklResult r = ucf::frankl_check(
          f, strict_half ? ucf::FranklThreshold::StrictHalf
                         : ucf::FranklThreshold::FloorHalf);
      emit(ucf::frankl_report(r, f),
           "element=" + std::to_string(r.element) +
               " count=" + std::to_string(r.count) +
               " satisfied=" + bool_str(r.satisfied) + "\n");
    } else if (*cmd_iso) {
      const ucf::SetFamily canon = ucf::canonical_iso_form(resolve_family(src));
      emit(ucf::family_report(canon), ucf::format_family(canon));
    } else if (*cmd_verify) {
      if (verify_all) verify_target = "all";
      std::optional<int> max_k;
      if (verify_max_k >= 0) max_k = verify_max_k;
      return run_verify(verify_target, verify_max_n, max_k);
    }
  } catch (const ucf::DisagreementError& e) {
    std::cerr << "verification failure: " << e.what() << "\n"
              << ucf::case_report_json(e.first()).dump() << "\n";
    return 2;
  } catch (const ucf::Error& e) {
    if (e.code() == ucf::Errc::DisagreementFound) {
      std::cerr << "verification failure: " << e.what() << "\n";
      return 2;
    }
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
