#pragma once

// Core types for finite set families over a universe [n] = {1, ..., n}.
//
// A subset of [n] is a bitmask (element i <-> bit i-1).  A SetFamily is a
// canonical, duplicate-free, ascending list of non-empty member masks that
// always contains the full universe mask.  The empty set is never a member;
// |2^[n]| therefore counts 2^n - 1 sets throughout this library.
//
// All operations are pure functions over immutable values and are safe to
// share across threads.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ucf {

/// One subset of [n], element i present iff bit (i-1) is set.
using Mask = std::uint32_t;

/// Hard cap imposed by the single-word mask representation.
inline constexpr int kMaxUniverse = 32;
/// Cap for operations that materialize all 2^n subsets (power set, up-sets).
inline constexpr int kMaxMaterializeUniverse = 24;
/// Cap for closure computations (full 2^n candidate scan per step).
inline constexpr int kMaxClosureUniverse = 20;
/// Membership queries use a 2^n presence table up to this size, binary
/// search on the sorted member list beyond it.
inline constexpr int kMaxPresenceTableUniverse = 20;
/// Cap for isomorphism canonicalization (n! relabelings are enumerated).
inline constexpr int kMaxIsoUniverse = 8;
/// Cap for exhaustive enumeration of all union-closed families.
inline constexpr int kMaxEnumerationUniverse = 4;
/// Enumeration cap with the explicit long-run opt-in.
inline constexpr int kMaxEnumerationUniverseLongRun = 5;

enum class Errc {
  EmptySetPresent,
  UniverseMissing,
  MaskOutOfRange,
  UniverseTooLarge,
  UniverseTooSmall,
  UniverseTooLargeForIso,
  UniverseTooLargeForEnumeration,
  NotUnionClosed,
  NotAMember,
  NotSubfamily,
  GeneratorNotMember,
  EmptyGeneratorList,
  NotOneDense,
  FamilyTooLarge,
  CriterionMismatch,
  LevelOutOfRange,
  PreconditionViolated,
  DisagreementFound,
  NoFamilyWithDensity,
  ParseError,
  InvalidParameter,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::EmptySetPresent: return "EmptySetPresent";
    case Errc::UniverseMissing: return "UniverseMissing";
    case Errc::MaskOutOfRange: return "MaskOutOfRange";
    case Errc::UniverseTooLarge: return "UniverseTooLarge";
    case Errc::UniverseTooSmall: return "UniverseTooSmall";
    case Errc::UniverseTooLargeForIso: return "UniverseTooLargeForIso";
    case Errc::UniverseTooLargeForEnumeration:
      return "UniverseTooLargeForEnumeration";
    case Errc::NotUnionClosed: return "NotUnionClosed";
    case Errc::NotAMember: return "NotAMember";
    case Errc::NotSubfamily: return "NotSubfamily";
    case Errc::GeneratorNotMember: return "GeneratorNotMember";
    case Errc::EmptyGeneratorList: return "EmptyGeneratorList";
    case Errc::NotOneDense: return "NotOneDense";
    case Errc::FamilyTooLarge: return "FamilyTooLarge";
    case Errc::CriterionMismatch: return "CriterionMismatch";
    case Errc::LevelOutOfRange: return "LevelOutOfRange";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::DisagreementFound: return "DisagreementFound";
    case Errc::NoFamilyWithDensity: return "NoFamilyWithDensity";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidParameter: return "InvalidParameter";
  }
  return "UnknownError";
}

/// Library error: every throw names the violated invariant via its code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

// ---------------------------------------------------------------------------
// Mask helpers
// ---------------------------------------------------------------------------

inline constexpr Mask full_mask(int n) {
  return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline constexpr int set_size(Mask m) { return std::popcount(m); }

/// Element i (1-based) present in m?
inline constexpr bool has_element(Mask m, int i) {
  return (m >> (i - 1)) & 1u;
}

inline constexpr Mask with_element(Mask m, int i) {
  return m | (Mask{1} << (i - 1));
}

inline constexpr Mask without_element(Mask m, int i) {
  return m & ~(Mask{1} << (i - 1));
}

inline constexpr bool is_subset(Mask a, Mask b) { return (a & b) == a; }

inline constexpr bool is_proper_subset(Mask a, Mask b) {
  return a != b && is_subset(a, b);
}

/// Smallest element of a non-empty mask (1-based).
inline int min_element(Mask m) { return std::countr_zero(m) + 1; }

/// Largest element of a non-empty mask (1-based).
inline int max_element(Mask m) { return 32 - std::countl_zero(m); }

/// Build a mask from 1-based elements.
inline Mask mask_of(std::initializer_list<int> elements) {
  Mask m = 0;
  for (int e : elements) m = with_element(m, e);
  return m;
}

/// Mask of the prefix [k] = {1, ..., k}; prefix_mask(0) is empty.
inline constexpr Mask prefix_mask(int k) { return full_mask(k); }

/// 1-based elements of a mask, ascending.
inline std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(set_size(m)));
  for (Mask rest = m; rest != 0; rest &= rest - 1)
    out.push_back(std::countr_zero(rest) + 1);
  return out;
}

/// "{1,2,5}" rendering, for diagnostics and reports.
inline std::string set_to_string(Mask m) {
  std::string out = "{";
  bool first = true;
  for (int e : elements_of(m)) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

/// Binomial coefficient, exact; small arguments only (n <= 34 is safe).
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) /
        static_cast<std::uint64_t>(i);
  }
  return r;
}

// ---------------------------------------------------------------------------
// SetFamily
// ---------------------------------------------------------------------------

/// A canonical family of non-empty subsets of [n] that contains [n] itself.
///
/// Immutable after construction (build one via make_family or the named
/// constructors elsewhere).  Members are stored ascending by mask value with
/// no duplicates.  Membership is O(1) through a presence table for n <= 20,
/// O(log |F|) binary search above that.
class SetFamily {
 public:
  SetFamily() = default;  // empty sentinel; real instances via make_family

  int universe() const { return n_; }
  Mask full() const { return full_mask(n_); }
  const std::vector<Mask>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  bool contains(Mask m) const {
    if (!presence_.empty()) return m < presence_.size() && presence_[m];
    return std::binary_search(members_.begin(), members_.end(), m);
  }

  /// True iff this is the full (empty-set-free) power set of [n].
  bool is_power_set() const {
    return n_ >= 1 && members_.size() == (std::uint64_t{1} << n_) - 1;
  }

  bool operator==(const SetFamily& other) const {
    return n_ == other.n_ && members_ == other.members_;
  }
  bool operator!=(const SetFamily& other) const { return !(*this == other); }

  /// True iff every member of this family is a member of `other`.
  bool subfamily_of(const SetFamily& other) const {
    if (n_ != other.n_) return false;
    return std::all_of(members_.begin(), members_.end(),
                       [&](Mask m) { return other.contains(m); });
  }

 private:
  friend SetFamily make_family(int n, std::vector<Mask> sets);

  SetFamily(int n, std::vector<Mask> members)
      : n_(n), members_(std::move(members)) {
    if (n_ <= kMaxPresenceTableUniverse) {
      presence_.assign(std::size_t{1} << n_, false);
      for (Mask m : members_) presence_[m] = true;
    }
  }

  int n_ = 0;
  std::vector<Mask> members_;
  std::vector<bool> presence_;
};

/// Validates and canonicalizes a family: sorts, removes duplicates, rejects
/// the empty set, out-of-range masks, and a missing universe set.  Rejection
/// is deliberate; nothing is silently repaired.
inline SetFamily make_family(int n, std::vector<Mask> sets) {
  if (n < 1) throw Error(Errc::UniverseTooSmall, "universe size must be >= 1");
  if (n > kMaxUniverse)
    throw Error(Errc::UniverseTooLarge,
                "universe size " + std::to_string(n) + " exceeds cap " +
                    std::to_string(kMaxUniverse));
  const Mask full = full_mask(n);
  for (Mask m : sets) {
    if (m == 0)
      throw Error(Errc::EmptySetPresent, "the empty set cannot be a member");
    if (m > full)
      throw Error(Errc::MaskOutOfRange, "set " + set_to_string(m) +
                                            " is not a subset of [" +
                                            std::to_string(n) + "]");
  }
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  if (sets.empty() || sets.back() != full)
    throw Error(Errc::UniverseMissing, "the universe [" + std::to_string(n) +
                                           "] must be a member");
  return SetFamily(n, std::move(sets));
}

/// All 2^n - 1 non-empty subsets of [n].
inline SetFamily power_set_family(int n) {
  if (n < 1) throw Error(Errc::UniverseTooSmall, "universe size must be >= 1");
  if (n > kMaxMaterializeUniverse)
    throw Error(Errc::UniverseTooLarge,
                "power set materialization capped at n = " +
                    std::to_string(kMaxMaterializeUniverse));
  std::vector<Mask> sets(full_mask(n));
  std::iota(sets.begin(), sets.end(), Mask{1});
  return make_family(n, std::move(sets));
}

/// True iff A union B is a member for all members A, B.
inline bool is_union_closed(const SetFamily& f) {
  const auto& ms = f.members();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      if (!f.contains(ms[i] | ms[j])) return false;
    }
  }
  return true;
}

/// True iff the family is closed under taking supersets within [n].
inline bool is_up_set(const SetFamily& f) {
  const Mask full = f.full();
  for (Mask m : f.members()) {
    // walk all supersets of m inside [n]
    for (Mask s = m; s != full; ) {
      s = (s + 1) | m;
      if (!f.contains(s)) return false;
    }
  }
  return true;
}

/// d_F(x) for every x plus the maximum-frequency element.
struct FamilyStatistics {
  std::size_t family_size = 0;
  std::vector<int> frequency;       // frequency[i] = d_F(i+1)
  int max_frequency_element = 0;    // smallest element attaining the max

  int frequency_of(int element) const {
    return frequency.at(static_cast<std::size_t>(element - 1));
  }
  int max_frequency() const { return frequency_of(max_frequency_element); }
};

inline FamilyStatistics statistics(const SetFamily& f) {
  FamilyStatistics st;
  st.family_size = f.size();
  st.frequency.assign(static_cast<std::size_t>(f.universe()), 0);
  for (Mask m : f.members())
    for (int e : elements_of(m)) st.frequency[static_cast<std::size_t>(e - 1)]++;
  st.max_frequency_element =
      1 + static_cast<int>(std::max_element(st.frequency.begin(),
                                            st.frequency.end()) -
                           st.frequency.begin());
  return st;
}

/// Applies a relabeling of [n] to a mask; perm[i] is the image of element
/// i+1, 0-based values.
inline Mask apply_permutation(Mask m, const std::vector<int>& perm) {
  Mask out = 0;
  for (Mask rest = m; rest != 0; rest &= rest - 1)
    out |= Mask{1} << perm[static_cast<std::size_t>(std::countr_zero(rest))];
  return out;
}

/// Canonical representative of the relabeling class of F: the
/// lexicographically least sorted member list over all n! permutations of
/// [n].  Two families are isomorphic iff their canonical forms are equal.
inline SetFamily canonical_iso_form(const SetFamily& f) {
  const int n = f.universe();
  if (n > kMaxIsoUniverse)
    throw Error(Errc::UniverseTooLargeForIso,
                "isomorphism canonicalization capped at n = " +
                    std::to_string(kMaxIsoUniverse));
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Mask> best = f.members();
  std::vector<Mask> image(f.size());
  do {
    std::transform(f.members().begin(), f.members().end(), image.begin(),
                   [&](Mask m) { return apply_permutation(m, perm); });
    std::sort(image.begin(), image.end());
    if (image < best) best = image;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return make_family(n, std::move(best));
}

}  // namespace ucf
