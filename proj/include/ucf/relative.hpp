#pragma once

// Relative subsets and closure roots.
//
// Within a union-closed family F, A is a subset of B "relative to F"
// (A <=_F B) when A = B, or B = [n], or some member C != B satisfies
// A u C = B.  The relation refines ordinary inclusion, coincides with it on
// the power set, and is transitive whenever F is 1-dense (a proper up-set)
// but not in general.
//
// A closure root of F is a union-closed H with closure(H) = F.  For 1-dense
// F the test is constructive: take the inclusion-wise minimal members G,
// form the relatively generated family <G>_F, and check whether its closure
// is exactly F; when it is, <G>_F itself is a root.  A brute-force oracle
// over all union-closed subfamilies backs the test at small sizes.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ucf/closure.hpp"
#include "ucf/enumerate.hpp"
#include "ucf/set_family.hpp"

namespace ucf {

namespace detail {

inline std::size_t member_index(const SetFamily& f, Mask m) {
  const auto& ms = f.members();
  const auto it = std::lower_bound(ms.begin(), ms.end(), m);
  if (it == ms.end() || *it != m)
    throw Error(Errc::NotAMember,
                set_to_string(m) + " is not a member of the family");
  return static_cast<std::size_t>(it - ms.begin());
}

/// Relative-subset test with memberships already verified.
inline bool relative_subset_unchecked(const SetFamily& f, Mask a, Mask b) {
  if (a == b || b == f.full()) return true;
  if (!is_subset(a, b)) return false;
  for (Mask c : f.members()) {
    if (c != b && (a | c) == b) return true;  // c is a subset of b here
  }
  return false;
}

inline void require_subfamily(const SetFamily& f, const SetFamily& h,
                              const char* op) {
  if (!h.subfamily_of(f))
    throw Error(Errc::NotSubfamily,
                std::string(op) + " requires a subfamily of the base family");
}

}  // namespace detail

/// A <=_F B.  Both sets must be members of F.
inline bool is_relative_subset(const SetFamily& f, Mask a, Mask b) {
  detail::member_index(f, a);
  detail::member_index(f, b);
  return detail::relative_subset_unchecked(f, a, b);
}

/// Memoized |F| x |F| relative-subset relation, indexed by member position.
class RelativeSubsetTable {
 public:
  explicit RelativeSubsetTable(const SetFamily& f) : family_(f) {
    const auto& ms = f.members();
    const std::size_t sz = ms.size();
    bits_.assign(sz * sz, false);
    for (std::size_t j = 0; j < sz; ++j) {
      for (std::size_t i = 0; i < sz; ++i) {
        if (detail::relative_subset_unchecked(f, ms[i], ms[j]))
          bits_[i * sz + j] = true;
      }
    }
  }

  const SetFamily& family() const { return family_; }

  bool related(std::size_t i, std::size_t j) const {
    return bits_[i * family_.size() + j];
  }

  bool related_masks(Mask a, Mask b) const {
    return related(detail::member_index(family_, a),
                   detail::member_index(family_, b));
  }

 private:
  SetFamily family_;
  std::vector<bool> bits_;
};

/// Result of the transitivity scan; the counterexample is the first
/// violating triple (A, B, C) with A <=_F B, B <=_F C, A not <=_F C in
/// member order.
struct TransitivityReport {
  bool transitive = true;
  std::optional<std::array<Mask, 3>> counterexample;
};

inline TransitivityReport is_relative_transitive(const SetFamily& f) {
  detail::require_union_closed(f, "is_relative_transitive");
  const RelativeSubsetTable rel(f);
  const auto& ms = f.members();
  const std::size_t sz = ms.size();
  for (std::size_t i = 0; i < sz; ++i) {
    for (std::size_t j = 0; j < sz; ++j) {
      if (!rel.related(i, j)) continue;
      for (std::size_t k = 0; k < sz; ++k) {
        if (rel.related(j, k) && !rel.related(i, k))
          return {false, std::array<Mask, 3>{ms[i], ms[j], ms[k]}};
      }
    }
  }
  return {true, std::nullopt};
}

/// All inclusion-wise minimal members of F.
inline std::vector<Mask> minimal_members(const SetFamily& f) {
  std::vector<Mask> out;
  for (Mask a : f.members()) {
    bool minimal = true;
    for (Mask b : f.members()) {
      if (b != a && is_subset(b, a)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

/// The up-set of all supersets of the generator sets: { B : some A in G has
/// A subset of B }.  Always union-closed and contains [n].
inline SetFamily up_set_generated(const std::vector<Mask>& generators, int n) {
  if (generators.empty())
    throw Error(Errc::EmptyGeneratorList, "up-set needs at least one generator");
  if (n < 1) throw Error(Errc::UniverseTooSmall, "universe size must be >= 1");
  if (n > kMaxMaterializeUniverse)
    throw Error(Errc::UniverseTooLarge,
                "up-set materialization capped at n = " +
                    std::to_string(kMaxMaterializeUniverse));
  const Mask full = full_mask(n);
  for (Mask g : generators) {
    if (g == 0)
      throw Error(Errc::EmptySetPresent, "generators must be non-empty");
    if (g > full)
      throw Error(Errc::MaskOutOfRange,
                  "generator " + set_to_string(g) + " exceeds the universe");
  }
  std::vector<Mask> out;
  for (Mask b = 1; b <= full; ++b) {
    for (Mask g : generators) {
      if (is_subset(g, b)) {
        out.push_back(b);
        break;
      }
    }
  }
  return make_family(n, std::move(out));
}

/// <K>_F: the members of F that relatively contain some generator in K.
/// Contains K itself; union-closed whenever F is 1-dense.
inline SetFamily relative_generated(const SetFamily& f,
                                    const std::vector<Mask>& generators) {
  detail::require_union_closed(f, "relative_generated");
  for (Mask g : generators) {
    if (!f.contains(g))
      throw Error(Errc::GeneratorNotMember,
                  "generator " + set_to_string(g) + " is not a member");
  }
  const RelativeSubsetTable rel(f);
  std::vector<std::size_t> gen_idx;
  gen_idx.reserve(generators.size());
  for (Mask g : generators) gen_idx.push_back(detail::member_index(f, g));
  std::vector<Mask> out;
  const auto& ms = f.members();
  for (std::size_t j = 0; j < ms.size(); ++j) {
    for (std::size_t gi : gen_idx) {
      if (rel.related(gi, j)) {
        out.push_back(ms[j]);
        break;
      }
    }
  }
  return make_family(f.universe(), std::move(out));
}

/// All members of H with no other member of H strictly below them in the
/// <=_F order.  When <=_F is not transitive this is the literal reading of
/// the definition, nothing more.
inline std::vector<Mask> relative_minimal_members(const SetFamily& f,
                                                  const SetFamily& h) {
  detail::require_union_closed(f, "relative_minimal_members");
  detail::require_union_closed(h, "relative_minimal_members");
  detail::require_subfamily(f, h, "relative_minimal_members");
  const RelativeSubsetTable rel(f);
  std::vector<Mask> out;
  for (Mask a : h.members()) {
    const std::size_t ai = detail::member_index(f, a);
    bool minimal = true;
    for (Mask b : h.members()) {
      if (b != a && rel.related(detail::member_index(f, b), ai)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

/// Whether closure(H) covers F.  Evaluated twice: directly, and through the
/// relative-subset criterion (every B in F relatively above a member of H
/// must itself be in H).  A mismatch between the two routes indicates an
/// implementation bug and is reported as such.
inline bool covers_under_closure(const SetFamily& f, const SetFamily& h) {
  detail::require_union_closed(f, "covers_under_closure");
  detail::require_union_closed(h, "covers_under_closure");
  detail::require_subfamily(f, h, "covers_under_closure");
  const bool direct = f.subfamily_of(closure(h));

  const RelativeSubsetTable rel(f);
  const auto& fm = f.members();
  bool criterion = true;
  for (Mask a : h.members()) {
    const std::size_t ai = detail::member_index(f, a);
    for (std::size_t j = 0; j < fm.size() && criterion; ++j) {
      if (rel.related(ai, j) && !h.contains(fm[j])) criterion = false;
    }
    if (!criterion) break;
  }

  if (direct != criterion)
    throw Error(Errc::CriterionMismatch,
                "direct cover check and relative-subset criterion disagree");
  return direct;
}

inline void require_one_dense(const SetFamily& f, const char* op) {
  if (f.is_power_set() || !is_up_set(f))
    throw Error(Errc::NotOneDense,
                std::string(op) + " is only valid for 1-dense families "
                "(proper up-sets)");
}

/// Verdict of the closure-root test plus all witnessing families.
struct RootCertificate {
  SetFamily input;
  std::vector<Mask> generating_set;   // inclusion-wise minimal members
  SetFamily relative_generated;       // <G>_F
  SetFamily closure_of_generated;     // closure(<G>_F)
  bool has_root = false;
  std::optional<SetFamily> witness_root;  // <G>_F when has_root
};

/// Closure-root existence test for a 1-dense family: F has a closure root
/// iff closure(<G>_F) = F, in which case <G>_F is one.  Inputs that are not
/// proper up-sets are rejected; the criterion is not valid for them.
inline RootCertificate has_closure_root(const SetFamily& f) {
  require_one_dense(f, "has_closure_root");
  RootCertificate cert;
  cert.input = f;
  cert.generating_set = minimal_members(f);
  cert.relative_generated = relative_generated(f, cert.generating_set);
  cert.closure_of_generated = closure(cert.relative_generated);
  cert.has_root = cert.closure_of_generated == f;
  if (cert.has_root) cert.witness_root = cert.relative_generated;
  return cert;
}

inline constexpr std::size_t kDefaultRootSearchMemberCap = 22;

/// Exhaustive closure-root search: all union-closed H contained in F with
/// closure(H) = F, by walking subfamilies in decreasing-size decision order.
/// In existence mode the walk stops at the first root found.
///
/// Two sound prunes keep the walk exhaustive but small, both straight from
/// the closure definition, independent of the relative-subset criterion
/// this backs up:
///   - a candidate whose union with a chosen set was already excluded
///     cannot be chosen (H must stay union-closed);
///   - once a member A of F has a chosen partner B with A u B excluded,
///     A can never re-enter any extension's closure, so the whole branch
///     misses F and dies.
/// At each surviving leaf closure(H) covers F by construction and only the
/// reverse inclusion is still tested.
inline std::vector<SetFamily> brute_force_closure_roots(
    const SetFamily& f,
    std::size_t member_cap = kDefaultRootSearchMemberCap,
    bool existence_only = false) {
  detail::require_closure_scale(f);
  detail::require_union_closed(f, "brute_force_closure_roots");
  if (f.size() > member_cap)
    throw Error(Errc::FamilyTooLarge,
                "root search over " + std::to_string(f.size()) +
                    " members exceeds the cap of " + std::to_string(member_cap));

  const Mask full = f.full();
  std::vector<Mask> candidates;
  candidates.reserve(f.size());
  for (Mask m : f.members())
    if (m != full) candidates.push_back(m);
  std::sort(candidates.begin(), candidates.end(), [](Mask a, Mask b) {
    const int pa = set_size(a), pb = set_size(b);
    return pa != pb ? pa > pb : a < b;
  });

  std::vector<std::uint8_t> chosen_present(static_cast<std::size_t>(full) + 1, 0);
  chosen_present[full] = 1;
  std::vector<Mask> chosen{full};
  std::vector<SetFamily> roots;

  const std::function<bool(std::size_t)> walk = [&](std::size_t idx) -> bool {
    if (idx == candidates.size()) {
      SetFamily h = make_family(f.universe(), chosen);
      if (detail::closure_unchecked(h) == f) {
        roots.push_back(std::move(h));
        if (existence_only) return false;
      }
      return true;
    }
    const Mask m = candidates[idx];

    bool includable = true;
    for (Mask b : chosen) {
      const Mask u = m | b;
      if (u != m && !chosen_present[u]) {
        includable = false;
        break;
      }
    }
    if (includable) {
      // adding m must not pair any member of F with an excluded union
      for (Mask a : f.members()) {
        const Mask u = a | m;
        if (u != a && u != m && !chosen_present[u]) {
          includable = false;
          break;
        }
      }
    }
    if (includable) {
      chosen.push_back(m);
      chosen_present[m] = 1;
      const bool go_on = walk(idx + 1);
      chosen_present[m] = 0;
      chosen.pop_back();
      if (!go_on) return false;
    }

    // excluding m is fatal if some (member of F, chosen) union equals m
    for (Mask b : chosen) {
      for (Mask a : f.members()) {
        if ((a | b) == m && a != m) return true;
      }
    }
    return walk(idx + 1);
  };
  walk(0);
  return roots;
}

/// For 1-dense F and any union-closed H inside F whose closure covers F,
/// closure(H) must also cover closure(<G>_F); the generated family attains
/// the least possible closure among covering subfamilies.  Returns the
/// verified truth value.  The power set is admitted as a degenerate base
/// (both closures are the power set).
inline bool covers_generated_closure(const SetFamily& f, const SetFamily& h) {
  if (!is_up_set(f))
    throw Error(Errc::NotOneDense,
                "covers_generated_closure needs an up-set base");
  detail::require_union_closed(h, "covers_generated_closure");
  detail::require_subfamily(f, h, "covers_generated_closure");
  const SetFamily closure_h = closure(h);
  if (!f.subfamily_of(closure_h))
    throw Error(Errc::PreconditionViolated,
                "closure(H) must cover F for this check");
  const SetFamily generated = relative_generated(f, minimal_members(f));
  return closure(generated).subfamily_of(closure_h);
}

}  // namespace ucf
