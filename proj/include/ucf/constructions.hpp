#pragma once

// Parameterized generators for the named families studied by this library,
// with their expected density / chain-parameter values attached so that the
// verification paths can assert them generically.

#include <optional>
#include <string>
#include <vector>

#include "ucf/relative.hpp"
#include "ucf/set_family.hpp"

namespace ucf {

/// The chain of nested prefixes {[1], [2], ..., [n]}.  Density n-1; the
/// chain parameter s is n-2 (for n >= 2): the longest bound is attained.
inline SetFamily chain_family(int n) {
  if (n < 1) throw Error(Errc::UniverseTooSmall, "universe size must be >= 1");
  if (n > kMaxUniverse)
    throw Error(Errc::UniverseTooLarge, "universe capped at 32");
  std::vector<Mask> sets;
  sets.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) sets.push_back(prefix_mask(i));
  return make_family(n, std::move(sets));
}

/// Embeds a union-closed family over [k] into the larger universe [n] and
/// adds [n] as the only new member.  Requires n >= k+2; the result is
/// (k+1)-dense regardless of the base family.
inline SetFamily lifted_family(const SetFamily& base, int n) {
  const int k = base.universe();
  if (n < k + 2)
    throw Error(Errc::UniverseTooSmall,
                "lift needs n >= k+2 (k = " + std::to_string(k) + ")");
  if (n > kMaxUniverse)
    throw Error(Errc::UniverseTooLarge, "universe capped at 32");
  if (!is_union_closed(base))
    throw Error(Errc::NotUnionClosed, "lift base must be union-closed");
  std::vector<Mask> sets = base.members();
  sets.push_back(full_mask(n));
  return make_family(n, std::move(sets));
}

/// All non-empty subsets of [n] in which every element has a neighbor
/// (i-1 or i+1 also present); equivalently all unions of the adjacent pairs
/// {i, i+1}.  Union-closed; (n-1)-dense for n >= 6.
inline SetFamily path_family(int n) {
  if (n < 2)
    throw Error(Errc::UniverseTooSmall, "path family needs n >= 2");
  if (n > kMaxMaterializeUniverse)
    throw Error(Errc::UniverseTooLarge,
                "path family materialization capped at n = " +
                    std::to_string(kMaxMaterializeUniverse));
  const Mask full = full_mask(n);
  std::vector<Mask> sets;
  for (Mask a = 1; a <= full; ++a) {
    bool ok = true;
    for (Mask rest = a; rest != 0 && ok; rest &= rest - 1) {
      const int i = std::countr_zero(rest) + 1;
      ok = (i > 1 && has_element(a, i - 1)) || (i < n && has_element(a, i + 1));
    }
    if (ok) sets.push_back(a);
  }
  return make_family(n, std::move(sets));
}

/// Five-member family {[n-2], [n]\{3}, [n]\{2}, [n]\{1}, [n]} whose density
/// is n-1 although its longest capped member chain has length 1: the
/// density lower bound s(F)+1 can be arbitrarily far from the truth.
inline SetFamily bound_gap_family(int n) {
  if (n < 5)
    throw Error(Errc::UniverseTooSmall, "bound-gap family needs n >= 5");
  if (n > kMaxUniverse)
    throw Error(Errc::UniverseTooLarge, "universe capped at 32");
  const Mask full = full_mask(n);
  return make_family(n, {prefix_mask(n - 2), without_element(full, 3),
                         without_element(full, 2), without_element(full, 1),
                         full});
}

/// The c nested prefixes [k-c], ..., [k-1] plus [n]: density exactly k with
/// chain parameter exactly c, for any 1 <= c < k <= n-2.
inline SetFamily interval_chain_family(int c, int k, int n) {
  if (c < 1 || c >= k || k > n - 2)
    throw Error(Errc::InvalidParameter,
                "interval chain needs 1 <= c < k <= n-2, got c=" +
                    std::to_string(c) + " k=" + std::to_string(k) +
                    " n=" + std::to_string(n));
  if (n > kMaxUniverse)
    throw Error(Errc::UniverseTooLarge, "universe capped at 32");
  std::vector<Mask> sets;
  for (int i = k - c; i <= k - 1; ++i) sets.push_back(prefix_mask(i));
  sets.push_back(full_mask(n));
  return make_family(n, std::move(sets));
}

/// All non-empty subsets of [n-2] plus [n] itself: a (n-1)-dense family of
/// size 2^(n-2) along which the normalized maximum element frequency can
/// increase under closure.
inline SetFamily cube_plus_universe(int n) {
  if (n < 4)
    throw Error(Errc::UniverseTooSmall, "cube-plus-universe needs n >= 4");
  if (n - 2 > kMaxMaterializeUniverse || n > kMaxUniverse)
    throw Error(Errc::UniverseTooLarge,
                "cube materialization capped at n = " +
                    std::to_string(kMaxMaterializeUniverse + 2));
  std::vector<Mask> sets;
  const Mask cube = prefix_mask(n - 2);
  for (Mask a = 1; a <= cube; ++a) sets.push_back(a);
  sets.push_back(full_mask(n));
  return make_family(n, std::move(sets));
}

// ---------------------------------------------------------------------------
// Uniform construction dispatch (CLI and verification plumbing)
// ---------------------------------------------------------------------------

enum class ConstructionKind {
  Chain,
  Lifted,
  Path,
  BoundGap,
  IntervalChain,
  CubePlusUniverse,
  UpSet,
  PowerSet,
};

struct ConstructionSpec {
  ConstructionKind kind = ConstructionKind::Chain;
  int n = 0;
  int k = 0;
  int c = 0;
  std::optional<SetFamily> base;   // Lifted
  std::vector<Mask> generators;    // UpSet
};

/// A built family together with the values the construction promises.
struct Construction {
  std::string name;
  SetFamily family;
  std::optional<int> expected_density;
  std::optional<int> expected_s;
};

inline Construction build_construction(const ConstructionSpec& spec) {
  Construction out;
  switch (spec.kind) {
    case ConstructionKind::Chain:
      out.name = "chain(n=" + std::to_string(spec.n) + ")";
      out.family = chain_family(spec.n);
      out.expected_density = spec.n - 1;
      out.expected_s = spec.n >= 2 ? spec.n - 2 : 0;
      break;
    case ConstructionKind::Lifted: {
      if (!spec.base)
        throw Error(Errc::InvalidParameter, "lifted construction needs a base");
      out.name = "lifted(k=" + std::to_string(spec.base->universe()) +
                 ",n=" + std::to_string(spec.n) + ")";
      out.family = lifted_family(*spec.base, spec.n);
      out.expected_density = spec.base->universe() + 1;
      break;
    }
    case ConstructionKind::Path:
      out.name = "path(n=" + std::to_string(spec.n) + ")";
      out.family = path_family(spec.n);
      if (spec.n >= 6) out.expected_density = spec.n - 1;
      break;
    case ConstructionKind::BoundGap:
      out.name = "bound-gap(n=" + std::to_string(spec.n) + ")";
      out.family = bound_gap_family(spec.n);
      out.expected_density = spec.n - 1;
      out.expected_s = 1;
      break;
    case ConstructionKind::IntervalChain:
      out.name = "interval-chain(c=" + std::to_string(spec.c) +
                 ",k=" + std::to_string(spec.k) +
                 ",n=" + std::to_string(spec.n) + ")";
      out.family = interval_chain_family(spec.c, spec.k, spec.n);
      out.expected_density = spec.k;
      out.expected_s = spec.c;
      break;
    case ConstructionKind::CubePlusUniverse:
      out.name = "cube-plus-universe(n=" + std::to_string(spec.n) + ")";
      out.family = cube_plus_universe(spec.n);
      out.expected_density = spec.n - 1;
      break;
    case ConstructionKind::UpSet:
      out.name = "up-set(n=" + std::to_string(spec.n) + ")";
      out.family = up_set_generated(spec.generators, spec.n);
      out.expected_density = out.family.is_power_set() ? 0 : 1;
      out.expected_s = 0;
      break;
    case ConstructionKind::PowerSet:
      out.name = "power-set(n=" + std::to_string(spec.n) + ")";
      out.family = power_set_family(spec.n);
      out.expected_density = 0;
      out.expected_s = 0;
      break;
  }
  return out;
}

/// Adjacent pairs {1,2}, {2,3}, ..., {n-1,n}.
inline std::vector<Mask> adjacent_pair_generators(int n) {
  if (n < 2)
    throw Error(Errc::UniverseTooSmall, "adjacent pairs need n >= 2");
  std::vector<Mask> gens;
  gens.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 1; i < n; ++i)
    gens.push_back(mask_of({i, i + 1}));
  return gens;
}

/// The up-set generated by the adjacent pairs: 1-dense; has a closure root
/// exactly when n is even (n >= 6).
inline SetFamily path_up_set(int n) {
  return up_set_generated(adjacent_pair_generators(n), n);
}

}  // namespace ucf
