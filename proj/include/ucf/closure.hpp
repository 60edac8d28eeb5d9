#pragma once

// The closure operator on union-closed families and everything derived from
// it: iterated closures, the density of a family, the first fully occupied
// cardinality level, and the longest capped member chain s(F).
//
// closure(F) = { A in 2^[n] \ {0} : F with A added is still union-closed }.
// It always contains F, is union-closed, and strictly grows F unless F is
// already the power set, so iterating reaches the power set in at most n-1
// steps.  The kernel is a single pass over all 2^n - 1 candidate masks with
// O(1) membership tests; it is deliberately naive because it doubles as the
// reference for every other algorithm here.

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

#include "ucf/set_family.hpp"

namespace ucf {

namespace runtime {

/// Worker cap for the candidate scans that allow partitioning.  Results are
/// identical for every setting; the default is sequential.
inline std::atomic<int>& max_threads_ref() {
  static std::atomic<int> value{1};
  return value;
}

inline int max_threads() { return max_threads_ref().load(); }

inline void set_max_threads(int t) {
  max_threads_ref().store(t < 1 ? 1 : t);
}

}  // namespace runtime

namespace detail {

/// A is admissible iff adding it keeps the family union-closed, i.e. every
/// union with a member lands back in the family or on A itself.
inline bool closure_admits(const SetFamily& f, Mask a) {
  for (Mask b : f.members()) {
    const Mask u = a | b;
    if (u != a && !f.contains(u)) return false;
  }
  return true;
}

/// Closure kernel without the union-closedness precondition check.
inline SetFamily closure_unchecked(const SetFamily& f) {
  const Mask full = f.full();
  const int threads = runtime::max_threads();
  std::vector<Mask> out;
  if (threads > 1 && full >= (Mask{1} << 12)) {
    std::vector<std::uint8_t> keep(static_cast<std::size_t>(full) + 1, 0);
    std::vector<std::thread> pool;
    const Mask chunk = full / static_cast<Mask>(threads) + 1;
    for (int t = 0; t < threads; ++t) {
      const Mask lo = 1 + chunk * static_cast<Mask>(t);
      const Mask hi = std::min<std::uint64_t>(full, std::uint64_t{lo} + chunk - 1);
      if (lo > hi) break;
      pool.emplace_back([&, lo, hi] {
        for (Mask a = lo; a <= hi; ++a)
          if (closure_admits(f, a)) keep[a] = 1;
      });
    }
    for (auto& th : pool) th.join();
    for (Mask a = 1; a <= full; ++a)
      if (keep[a]) out.push_back(a);
  } else {
    for (Mask a = 1; a <= full; ++a)
      if (closure_admits(f, a)) out.push_back(a);
  }
  return make_family(f.universe(), std::move(out));
}

inline void require_union_closed(const SetFamily& f, const char* op) {
  if (!is_union_closed(f))
    throw Error(Errc::NotUnionClosed,
                std::string(op) + " requires a union-closed family");
}

inline void require_closure_scale(const SetFamily& f) {
  if (f.universe() > kMaxClosureUniverse)
    throw Error(Errc::UniverseTooLarge,
                "closure scans are capped at n = " +
                    std::to_string(kMaxClosureUniverse));
}

}  // namespace detail

/// The closure of a union-closed family.
inline SetFamily closure(const SetFamily& f) {
  detail::require_closure_scale(f);
  detail::require_union_closed(f, "closure");
  return detail::closure_unchecked(f);
}

/// The increasing tower F = levels[0] < levels[1] < ... < power set.
/// density() is the number of closure steps taken, at most n-1.
struct ClosureTrace {
  std::vector<SetFamily> levels;

  int density() const { return static_cast<int>(levels.size()) - 1; }

  /// Level i, saturating at the final power-set level.
  const SetFamily& level(int i) const {
    if (i < 0) throw Error(Errc::LevelOutOfRange, "negative closure level");
    const std::size_t idx = static_cast<std::size_t>(i);
    return idx < levels.size() ? levels[idx] : levels.back();
  }
};

inline ClosureTrace closure_trace(const SetFamily& f) {
  detail::require_closure_scale(f);
  detail::require_union_closed(f, "closure_trace");
  ClosureTrace trace;
  trace.levels.push_back(f);
  while (!trace.levels.back().is_power_set())
    trace.levels.push_back(detail::closure_unchecked(trace.levels.back()));
  return trace;
}

inline SetFamily iterated_closure(const SetFamily& f, int count) {
  if (count < 0)
    throw Error(Errc::InvalidParameter, "closure count must be >= 0");
  detail::require_closure_scale(f);
  detail::require_union_closed(f, "iterated_closure");
  SetFamily out = f;
  for (int i = 0; i < count && !out.is_power_set(); ++i)
    out = detail::closure_unchecked(out);
  return out;
}

/// The density k: the least number of closure steps from F to the power
/// set.  Computed by the trace, never by a formula.
inline int density(const SetFamily& f) { return closure_trace(f).density(); }

/// Smallest t >= 1 such that every size-t subset of [n] is a member.  Always
/// defined since [n] itself is a member; for a union-closed family all
/// levels above the returned one are full as well.
inline int min_full_level(const SetFamily& f) {
  const int n = f.universe();
  std::vector<std::uint64_t> count(static_cast<std::size_t>(n) + 1, 0);
  for (Mask m : f.members()) count[static_cast<std::size_t>(set_size(m))]++;
  for (int t = 1; t <= n; ++t) {
    if (count[static_cast<std::size_t>(t)] == binomial(n, t)) return t;
  }
  return n;  // unreachable: [n] is always a member
}

namespace detail {

/// Does A have a strict superset inside [n] that is not a member?
inline bool has_outside_superset(const SetFamily& f, Mask a) {
  const Mask full = f.full();
  for (Mask s = a; s != full; ) {
    s = (s + 1) | a;
    if (!f.contains(s)) return true;
  }
  return false;
}

}  // namespace detail

/// s(F): the largest r such that some chain A_1 < A_2 < ... < A_r of members
/// is capped by a strict superset B of A_r outside the family; 0 when no
/// member has such a cap (in particular for the power set).
///
/// Longest-chain DP over members in ascending cardinality order; subset
/// tests are plain mask arithmetic.
inline int s_param(const SetFamily& f) {
  detail::require_union_closed(f, "s_param");
  const auto& ms = f.members();
  std::vector<std::size_t> order(ms.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const int pa = set_size(ms[a]), pb = set_size(ms[b]);
    return pa != pb ? pa < pb : ms[a] < ms[b];
  });
  std::vector<int> longest(ms.size(), 1);
  int best = 0;
  for (std::size_t oi = 0; oi < order.size(); ++oi) {
    const std::size_t i = order[oi];
    for (std::size_t oj = 0; oj < oi; ++oj) {
      const std::size_t j = order[oj];
      if (is_proper_subset(ms[j], ms[i]) && longest[j] + 1 > longest[i])
        longest[i] = longest[j] + 1;
    }
    if (detail::has_outside_superset(f, ms[i]) && longest[i] > best)
      best = longest[i];
  }
  return best;
}

/// Density together with the chain lower bound s(F) + 1 <= density (strict
/// inequality s(F) < density holds for every family except the power set).
struct DensityReport {
  int density = 0;
  int s_param = 0;
  int lower_bound = 0;  // s_param + 1
  bool bound_tight = false;
};

inline DensityReport density_report(const SetFamily& f) {
  DensityReport report;
  report.density = density(f);
  report.s_param = s_param(f);
  report.lower_bound = report.s_param + 1;
  report.bound_tight = report.density == report.lower_bound;
  return report;
}

}  // namespace ucf
