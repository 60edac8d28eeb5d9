#pragma once

// Family statistics around the union-closed sets conjecture: the maximum
// element frequency check, the normalized frequency g(F) = max d_F(x)/|F|
// in exact rational arithmetic, exhaustive enumeration censuses, and the
// closure tree of all union-closed families over a small universe.

#include <boost/rational.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "ucf/closure.hpp"
#include "ucf/enumerate.hpp"
#include "ucf/set_family.hpp"

namespace ucf {

using Ratio = boost::rational<long long>;

/// Threshold flavor for the conjecture check.  The floor threshold
/// (max d_F(x) >= floor(|F|/2)) is the weaker reading at odd |F|; the
/// strict-half mode demands 2 max d_F(x) >= |F|.
enum class FranklThreshold { FloorHalf, StrictHalf };

struct FranklResult {
  int element = 0;     // smallest element of maximum frequency
  int count = 0;       // its frequency
  bool satisfied = false;
};

inline FranklResult frankl_check(const SetFamily& f,
                                 FranklThreshold mode = FranklThreshold::FloorHalf) {
  detail::require_union_closed(f, "frankl_check");
  const FamilyStatistics st = statistics(f);
  FranklResult r;
  r.element = st.max_frequency_element;
  r.count = st.max_frequency();
  const long long size = static_cast<long long>(st.family_size);
  r.satisfied = mode == FranklThreshold::FloorHalf
                    ? r.count >= size / 2
                    : 2LL * r.count >= size;
  return r;
}

/// g(F) = max element frequency over |F|, exact.
inline Ratio g_value(const SetFamily& f) {
  detail::require_union_closed(f, "g_value");
  const FamilyStatistics st = statistics(f);
  return Ratio(st.max_frequency(), static_cast<long long>(st.family_size));
}

struct GMonotonicityProbe {
  Ratio g_input;
  Ratio g_closure;
  bool decreased = false;  // g(F) >= g(closure(F))
};

/// Compares g before and after one closure step.  No direction is
/// guaranteed: g can grow under closure.
inline GMonotonicityProbe g_monotonicity_probe(const SetFamily& f) {
  if (f.is_power_set())
    throw Error(Errc::PreconditionViolated,
                "the power set is its own closure; nothing to probe");
  GMonotonicityProbe probe;
  probe.g_input = g_value(f);
  probe.g_closure = g_value(closure(f));
  probe.decreased = probe.g_input >= probe.g_closure;
  return probe;
}

// ---------------------------------------------------------------------------
// Census and closure tree
// ---------------------------------------------------------------------------

/// Counts of union-closed families over [n] bucketed by density, plus the
/// number of labelled union-closed families f_k for every k <= n.  The
/// a_values table (minimum g per density) is reported as data; whether it
/// is monotone in the density is an open problem and nothing asserts it.
struct DensityCensus {
  int n = 0;
  std::uint64_t total = 0;
  std::map<int, std::uint64_t> labelled_counts;  // density -> families
  std::map<int, std::uint64_t> iso_counts;       // density -> relabeling classes
  std::map<int, std::uint64_t> leaf_counts;      // density -> families w/o root
  std::map<int, Ratio> a_values;                 // density -> min g, exact
  std::vector<std::uint64_t> f_values;           // f_values[k] = f_k, f_0 = 1
};

/// Number of labelled union-closed families over [k]; f_0 = 1 counts the
/// empty family over the empty universe (whose lift is {[n]}).
inline std::uint64_t count_union_closed(int k, bool allow_long_run = false) {
  if (k == 0) return 1;
  std::uint64_t count = 0;
  for_each_union_closed(k, [&](const SetFamily&) {
    ++count;
    return true;
  }, allow_long_run);
  return count;
}

/// Exhaustive census at n <= 4.  Verifies the lift lower bound
/// count(k) >= C(n, k-1) * f_{k-1} for every 1 <= k <= n-1.
inline DensityCensus density_census(int n) {
  DensityCensus census;
  census.n = n;
  census.f_values.assign(static_cast<std::size_t>(n) + 1, 0);
  census.f_values[0] = 1;
  for (int k = 1; k <= n; ++k)
    census.f_values[static_cast<std::size_t>(k)] = count_union_closed(k);

  std::map<int, std::set<std::vector<Mask>>> iso_forms;
  std::set<std::vector<Mask>> closure_images;
  std::vector<std::pair<std::vector<Mask>, int>> families;  // members, density
  for_each_union_closed(n, [&](const SetFamily& f) {
    const ClosureTrace trace = closure_trace(f);
    const int d = trace.density();
    census.total++;
    census.labelled_counts[d]++;
    iso_forms[d].insert(canonical_iso_form(f).members());
    closure_images.insert(trace.level(1).members());
    families.emplace_back(f.members(), d);
    const Ratio g = g_value(f);
    const auto it = census.a_values.find(d);
    if (it == census.a_values.end() || g < it->second)
      census.a_values[d] = g;
    return true;
  });
  for (const auto& [d, forms] : iso_forms)
    census.iso_counts[d] = forms.size();
  for (const auto& [members, d] : families) {
    if (!closure_images.count(members)) census.leaf_counts[d]++;
  }

  for (int k = 1; k <= n - 1; ++k) {
    const std::uint64_t bound =
        binomial(n, k - 1) * census.f_values[static_cast<std::size_t>(k - 1)];
    if (census.labelled_counts[k] < bound)
      throw Error(Errc::DisagreementFound,
                  "census found " + std::to_string(census.labelled_counts[k]) +
                      " families of density " + std::to_string(k) +
                      ", below the lift lower bound " + std::to_string(bound));
  }
  return census;
}

/// a_{k,n}: the minimum of g over all families of density k over [n].
inline Ratio a_value(int k, int n) {
  std::optional<Ratio> best;
  for_each_union_closed(n, [&](const SetFamily& f) {
    if (density(f) == k) {
      const Ratio g = g_value(f);
      if (!best || g < *best) best = g;
    }
    return true;
  });
  if (!best)
    throw Error(Errc::NoFamilyWithDensity,
                "no family of density " + std::to_string(k) + " over [" +
                    std::to_string(n) + "]");
  return *best;
}

/// Every union-closed family over [n] pointing at its closure: a tree
/// rooted at the power set (the only self-loop) of depth at most n-1.
/// Leaves are the families that are nobody's closure, i.e. have no root.
struct ClosureTree {
  int n = 0;
  std::vector<SetFamily> nodes;  // enumeration order; node id = index
  std::vector<int> parent;       // parent[i] = id of closure(nodes[i])
  int root = -1;                 // id of the power set
  int depth = 0;                 // longest directed path length
  std::vector<int> leaves;       // ids with no preimage under closure
};

inline ClosureTree closure_tree(int n) {
  ClosureTree tree;
  tree.n = n;
  tree.nodes = enumerate_union_closed(n);
  std::map<std::vector<Mask>, int> index;
  for (std::size_t i = 0; i < tree.nodes.size(); ++i)
    index[tree.nodes[i].members()] = static_cast<int>(i);
  tree.root = index.at(power_set_family(n).members());

  tree.parent.resize(tree.nodes.size());
  std::vector<char> has_child(tree.nodes.size(), 0);
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const SetFamily up = closure(tree.nodes[i]);
    tree.parent[i] = index.at(up.members());
    has_child[static_cast<std::size_t>(tree.parent[i])] = 1;
  }

  std::vector<int> height(tree.nodes.size(), -1);
  height[static_cast<std::size_t>(tree.root)] = 0;
  // parent chains strictly shrink toward the root, so a simple walk ends
  const std::function<int(int)> height_of = [&](int id) -> int {
    if (height[static_cast<std::size_t>(id)] >= 0)
      return height[static_cast<std::size_t>(id)];
    const int h = 1 + height_of(tree.parent[static_cast<std::size_t>(id)]);
    height[static_cast<std::size_t>(id)] = h;
    return h;
  };
  for (std::size_t i = 0; i < tree.nodes.size(); ++i)
    tree.depth = std::max(tree.depth, height_of(static_cast<int>(i)));
  if (tree.depth > n - 1)
    throw Error(Errc::DisagreementFound,
                "closure tree depth exceeds n-1");

  for (std::size_t i = 0; i < tree.nodes.size(); ++i)
    if (!has_child[i]) tree.leaves.push_back(static_cast<int>(i));
  return tree;
}

}  // namespace ucf
