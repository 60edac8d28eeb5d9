#pragma once

// Exhaustive enumeration of union-closed families.
//
// The walker decides candidate masks in descending cardinality order, so the
// union of any two already chosen sets has itself already been decided; a
// candidate is admissible exactly when all its unions with chosen sets are
// chosen.  Union-closedness therefore holds at every node of the recursion
// and branches die on the first violation.  The include branch is explored
// first, which makes the power set (or the whole base family) the first
// family emitted and keeps the stream order deterministic.

#include <functional>
#include <vector>

#include "ucf/set_family.hpp"

namespace ucf {

/// Visitor contract: return true to continue, false to stop the walk.
using FamilyVisitor = std::function<bool(const SetFamily&)>;

/// Visits every union-closed subfamily of `base` that contains the universe
/// set, in a fixed deterministic order.  `base` itself need not be
/// union-closed.  Returns false iff the visitor stopped the walk.
inline bool for_each_union_closed_subfamily(const SetFamily& base,
                                            const FamilyVisitor& visit) {
  const Mask full = base.full();
  std::vector<Mask> candidates;
  candidates.reserve(base.size());
  for (Mask m : base.members())
    if (m != full) candidates.push_back(m);
  std::sort(candidates.begin(), candidates.end(), [](Mask a, Mask b) {
    const int pa = set_size(a), pb = set_size(b);
    return pa != pb ? pa > pb : a < b;
  });

  std::vector<std::uint8_t> chosen_present(static_cast<std::size_t>(full) + 1, 0);
  chosen_present[full] = 1;
  std::vector<Mask> chosen{full};

  const std::function<bool(std::size_t)> walk = [&](std::size_t idx) -> bool {
    if (idx == candidates.size())
      return visit(make_family(base.universe(), chosen));
    const Mask m = candidates[idx];
    bool admissible = true;
    for (Mask a : chosen) {
      const Mask u = m | a;
      if (u != m && !chosen_present[u]) {
        admissible = false;
        break;
      }
    }
    if (admissible) {
      chosen.push_back(m);
      chosen_present[m] = 1;
      const bool go_on = walk(idx + 1);
      chosen_present[m] = 0;
      chosen.pop_back();
      if (!go_on) return false;
    }
    return walk(idx + 1);
  };
  return walk(0);
}

/// Visits every union-closed family over [n] (containing [n], excluding the
/// empty set) in a fixed deterministic order.  Full enumeration is capped at
/// n = 4; n = 5 requires the explicit long-run opt-in.
inline void for_each_union_closed(int n, const FamilyVisitor& visit,
                                  bool allow_long_run = false) {
  const int cap =
      allow_long_run ? kMaxEnumerationUniverseLongRun : kMaxEnumerationUniverse;
  if (n < 1) throw Error(Errc::UniverseTooSmall, "universe size must be >= 1");
  if (n > cap)
    throw Error(Errc::UniverseTooLargeForEnumeration,
                "full enumeration capped at n = " + std::to_string(cap) +
                    (allow_long_run ? "" : " (pass the long-run flag for 5)"));
  for_each_union_closed_subfamily(power_set_family(n), visit);
}

inline std::vector<SetFamily> enumerate_union_closed(int n,
                                                     bool allow_long_run = false) {
  std::vector<SetFamily> out;
  for_each_union_closed(n, [&](const SetFamily& f) {
    out.push_back(f);
    return true;
  }, allow_long_run);
  return out;
}

}  // namespace ucf
