#pragma once

// Structural membership classifiers for two family constructions, each
// cross-validated against directly computed closures.
//
// Lift classifier: for H = F u {[n]} with F union-closed over [k] and
// n >= k+2, a six-case split of any subset A (by A's part outside [k])
// predicts whether A lies in the t-th closure of H, for every 1 <= t <= k.
//
// Path classifier: for the path family over [n] (n >= 6), a fourteen-case
// split of any non-member A with |A| <= n-k-1 predicts whether A lies in
// the k-th closure, for every 1 <= k <= n-5.
//
// The predicates are transcribed literally, boundary conventions included;
// a sweep reports any disagreement between predicted and computed
// membership instead of resolving it.

#include <optional>
#include <string>
#include <vector>

#include "ucf/closure.hpp"
#include "ucf/constructions.hpp"
#include "ucf/set_family.hpp"

namespace ucf {

/// One classified subset: the matched structural case, the membership it
/// predicts, and the membership the closure computation actually found.
struct CaseReport {
  Mask subject = 0;
  int level = 0;                    // closure depth t (lift) or k (path)
  int case_index = 0;               // 1-based; primary (first) matched case
  std::vector<int> matched_cases;   // every literally matching case
  bool predicted_member = false;
  bool computed_member = false;
  bool agrees = false;

  std::string case_label() const {
    static const char* roman[] = {"",     "i",    "ii",  "iii", "iv",
                                  "v",    "vi",   "vii", "viii", "ix",
                                  "x",    "xi",   "xii", "xiii", "xiv"};
    if (case_index < 1 || case_index > 14) return "(?)";
    return std::string("(") + roman[case_index] + ")";
  }
};

/// Classification failure: a prediction disagreed with the computed
/// closure, the matched cases contradicted each other, or no case matched.
class DisagreementError : public Error {
 public:
  DisagreementError(const std::string& message, CaseReport first,
                    std::vector<CaseReport> sample = {})
      : Error(Errc::DisagreementFound, message),
        first_(std::move(first)),
        sample_(std::move(sample)) {}

  const CaseReport& first() const { return first_; }
  const std::vector<CaseReport>& sample() const { return sample_; }

 private:
  CaseReport first_;
  std::vector<CaseReport> sample_;
};

// ---------------------------------------------------------------------------
// Lift classification (six cases)
// ---------------------------------------------------------------------------

/// Context for classifying subsets against H = base u {[n]}.  Builds both
/// closure towers once; classification is then O(|base closure level|) per
/// subset.
class LiftClassifier {
 public:
  LiftClassifier(const SetFamily& base, int n)
      : base_(base),
        lifted_(lifted_family(base, n)),
        base_trace_(closure_trace(base)),
        lift_trace_(closure_trace(lifted_)) {}

  int base_universe() const { return base_.universe(); }
  int universe() const { return lifted_.universe(); }
  const SetFamily& lifted() const { return lifted_; }
  const ClosureTrace& lifted_trace() const { return lift_trace_; }

  /// Case split on A by its part outside [k]:
  ///   empty            -> (i)/(ii): membership of A in the base tower;
  ///   all of [n]\[k]   -> (iii)/(iv): every base-tower set E not below A
  ///                       must union with A into the lifted tower;
  ///   proper non-empty -> (v)/(vi): |A n [k]| at least k-t+1 or not.
  /// Cases (i), (iii), (v) predict membership at level t, the others
  /// predict non-membership.
  CaseReport classify(Mask subject, int level) const {
    const int k = base_.universe();
    const int n = lifted_.universe();
    if (level < 1 || level > k)
      throw Error(Errc::LevelOutOfRange,
                  "lift classification needs 1 <= t <= k");
    if (subject == 0 || subject > full_mask(n))
      throw Error(Errc::MaskOutOfRange, "subject must be a non-empty subset");

    const Mask block = full_mask(n) & ~prefix_mask(k);  // [n] \ [k]
    const Mask inside = subject & prefix_mask(k);
    const Mask outside = subject & block;

    CaseReport report;
    report.subject = subject;
    report.level = level;
    if (outside == 0) {
      report.case_index = base_trace_.level(level).contains(inside) ? 1 : 2;
    } else if (outside == block) {
      bool all_unions_inside = true;
      for (Mask e : base_trace_.level(level - 1).members()) {
        if (!is_subset(e, subject) &&
            !lift_trace_.level(level - 1).contains(e | subject)) {
          all_unions_inside = false;
          break;
        }
      }
      report.case_index = all_unions_inside ? 3 : 4;
    } else {
      report.case_index = set_size(inside) >= k - level + 1 ? 5 : 6;
    }
    report.matched_cases = {report.case_index};
    report.predicted_member = report.case_index % 2 == 1;
    report.computed_member = lift_trace_.level(level).contains(subject);
    report.agrees = report.predicted_member == report.computed_member;
    return report;
  }

 private:
  SetFamily base_;
  SetFamily lifted_;
  ClosureTrace base_trace_;
  ClosureTrace lift_trace_;
};

inline CaseReport lift_classify(Mask subject, int level, const SetFamily& base,
                                int n) {
  return LiftClassifier(base, n).classify(subject, level);
}

namespace detail {

inline void throw_disagreements(const std::string& what,
                                std::vector<CaseReport> bad) {
  const CaseReport first = bad.front();
  if (bad.size() > 5) bad.resize(5);
  throw DisagreementError(
      what + ": " + set_to_string(first.subject) + " at level " +
          std::to_string(first.level) + " matched case " + first.case_label() +
          " predicting " + (first.predicted_member ? "member" : "non-member") +
          " but computation says otherwise",
      first, std::move(bad));
}

}  // namespace detail

/// Full sweep for one lift: classifies every non-empty subset of [n] at
/// every level 1 <= t <= k and checks every prediction against the computed
/// closure.  Also checks that the lift is (k+1)-dense and that after k
/// closures only subsets of [n]\[k] are missing (possibly all of them,
/// possibly all but [n]\[k] itself).
inline std::vector<CaseReport> verify_lift(const SetFamily& base, int n) {
  const LiftClassifier classifier(base, n);
  const int k = classifier.base_universe();
  std::vector<CaseReport> reports;
  std::vector<CaseReport> bad;
  for (int t = 1; t <= k; ++t) {
    for (Mask a = 1; a <= full_mask(n); ++a) {
      CaseReport r = classifier.classify(a, t);
      if (!r.agrees) bad.push_back(r);
      reports.push_back(std::move(r));
    }
  }
  if (!bad.empty()) detail::throw_disagreements("lift classification", bad);

  if (classifier.lifted_trace().density() != k + 1)
    throw Error(Errc::DisagreementFound,
                "lift of a universe-" + std::to_string(k) +
                    " family must be " + std::to_string(k + 1) + "-dense, got " +
                    std::to_string(classifier.lifted_trace().density()));

  const Mask block = full_mask(n) & ~prefix_mask(k);
  const SetFamily& at_k = classifier.lifted_trace().level(k);
  std::vector<Mask> missing;
  for (Mask a = 1; a <= full_mask(n); ++a)
    if (!at_k.contains(a)) missing.push_back(a);
  std::vector<Mask> block_subsets;
  for (Mask a = 1; a <= full_mask(n); ++a)
    if (is_subset(a, block)) block_subsets.push_back(a);
  std::vector<Mask> block_subsets_proper = block_subsets;
  block_subsets_proper.pop_back();  // drop the block itself (largest)
  if (missing != block_subsets && missing != block_subsets_proper)
    throw Error(Errc::DisagreementFound,
                "after k closures the missing sets must be the subsets of "
                "[n]\\[k], at most dropping the block itself");
  return reports;
}

// ---------------------------------------------------------------------------
// Path classification (fourteen cases)
// ---------------------------------------------------------------------------

/// Context for classifying non-members of the path family over [n].
class PathClassifier {
 public:
  explicit PathClassifier(int n)
      : family_(path_family(n)), trace_(closure_trace(family_)) {
    if (n < 6)
      throw Error(Errc::UniverseTooSmall,
                  "path classification needs n >= 6");
  }

  int universe() const { return family_.universe(); }
  const SetFamily& family() const { return family_; }
  const ClosureTrace& trace() const { return trace_; }

  /// Evaluates all fourteen structural conditions literally and records
  /// every match.  Cases (iii), (iv), (v), (vi), (x), (xi), (xiii) predict
  /// membership at closure depth k, the rest predict non-membership; a
  /// subject matching cases from both groups (or none at all) is a
  /// classification failure and throws.
  CaseReport classify(Mask subject, int k) const {
    const int n = family_.universe();
    if (k < 1 || k > n - 5)
      throw Error(Errc::PreconditionViolated,
                  "path classification needs 1 <= k <= n-5");
    if (subject == 0 || subject > full_mask(n))
      throw Error(Errc::MaskOutOfRange, "subject must be a non-empty subset");
    if (family_.contains(subject))
      throw Error(Errc::PreconditionViolated,
                  "path classification only covers non-members");
    const int size = set_size(subject);
    if (size > n - k - 1)
      throw Error(Errc::PreconditionViolated,
                  "path classification needs |A| <= n-k-1");

    const Mask a = subject;
    const bool e1 = has_element(a, 1), e2 = has_element(a, 2);
    const bool en = has_element(a, n), en1 = has_element(a, n - 1);
    const Mask interior_band = prefix_mask(n - 2) & ~prefix_mask(2);  // {3..n-2}
    const Mask no_last_two = prefix_mask(n - 2);                     // {1..n-2}
    const Mask no_first_two = full_mask(n) & ~prefix_mask(2);        // {3..n}
    const Mask drop_max = without_element(a, max_element(a));
    const Mask drop_min = without_element(a, min_element(a));

    // does some element strictly between min and max sit isolated?
    bool isolated_interior = false;
    for (int j = min_element(a) + 1; j < max_element(a); ++j) {
      if (has_element(a, j) && !has_element(a, j - 1) && !has_element(a, j + 1)) {
        isolated_interior = true;
        break;
      }
    }

    std::vector<int> matched;
    auto match = [&](int index, bool condition) {
      if (condition) matched.push_back(index);
    };
    match(1, e1 && !e2);
    match(2, en && !en1);
    match(3, e1 && e2 && !en && size == n - k - 1);
    match(4, en1 && en && !e1 && size == n - k - 1);
    match(5, !e1 && !en && size == n - k - 1);
    match(6, e1 && e2 && en1 && en && size == n - k - 1);
    match(7, is_subset(a, no_last_two) && (e1 || e2) && size == n - k - 2 &&
                 !family_.contains(drop_max));
    match(8, is_subset(a, no_first_two) && (en1 || en) && size == n - k - 2 &&
                 !family_.contains(drop_min));
    match(9, size == n - k - 2 && (e1 || e2) && (en1 || en));
    match(10, is_subset(a, no_last_two) && size == n - k - 2 &&
                  family_.contains(drop_max));
    match(11, is_subset(a, no_first_two) && size == n - k - 2 &&
                  family_.contains(drop_min));
    match(12, is_subset(a, interior_band) && size == n - k - 2 &&
                  isolated_interior);
    match(13, is_subset(a, interior_band) && size == n - k - 2 &&
                  !isolated_interior);
    match(14, size <= n - k - 3);

    static constexpr bool kPredictsMember[15] = {
        false, false, false, true,  true,  true,  true, false,
        false, false, true,  true,  false, true,  false};
    bool any_member = false, any_non_member = false;
    for (int c : matched)
      (kPredictsMember[c] ? any_member : any_non_member) = true;

    CaseReport report;
    report.subject = subject;
    report.level = k;
    report.matched_cases = matched;
    report.case_index = matched.empty() ? 0 : matched.front();
    report.computed_member = trace_.level(k).contains(subject);
    if (matched.empty() || (any_member && any_non_member)) {
      report.predicted_member = any_member;
      report.agrees = false;
      throw DisagreementError(
          matched.empty()
              ? "no structural case matched " + set_to_string(subject)
              : "cases with mixed predictions matched " + set_to_string(subject),
          report);
    }
    report.predicted_member = any_member;
    report.agrees = report.predicted_member == report.computed_member;
    return report;
  }

 private:
  SetFamily family_;
  ClosureTrace trace_;
};

inline CaseReport path_classify(Mask subject, int k, int n) {
  return PathClassifier(n).classify(subject, k);
}

/// Full sweep for the path family over [n]: classifies every non-member of
/// size at most n-k-1 at every depth k <= min(max_k, n-5) and checks every
/// prediction.  Also checks the facts the classification leaves out (members
/// and all sets of size >= n-k stay members of the k-th closure), that the
/// family is (n-1)-dense, that {3} enters the (n-4)-th closure while
/// {1,3,4} stays out of it, and that the (n-2)-nd closure is a proper
/// up-set.
inline std::vector<CaseReport> verify_path(int n,
                                           std::optional<int> max_k = {}) {
  const PathClassifier classifier(n);
  const SetFamily& family = classifier.family();
  const ClosureTrace& trace = classifier.trace();
  const int depth_cap = max_k ? std::min(*max_k, n - 5) : n - 5;

  std::vector<CaseReport> reports;
  std::vector<CaseReport> bad;
  for (int k = 1; k <= depth_cap; ++k) {
    for (Mask a = 1; a <= full_mask(n); ++a) {
      const bool member = family.contains(a);
      if (!member && set_size(a) <= n - k - 1) {
        CaseReport r = classifier.classify(a, k);
        if (!r.agrees) bad.push_back(r);
        reports.push_back(std::move(r));
      } else if (member || set_size(a) >= n - k) {
        // outside the classification's range membership is forced
        if (!trace.level(k).contains(a))
          throw Error(Errc::DisagreementFound,
                      set_to_string(a) + " must stay in closure level " +
                          std::to_string(k));
      }
    }
  }
  if (!bad.empty()) detail::throw_disagreements("path classification", bad);

  if (trace.density() != n - 1)
    throw Error(Errc::DisagreementFound,
                "path family over [" + std::to_string(n) + "] must be " +
                    std::to_string(n - 1) + "-dense, got " +
                    std::to_string(trace.density()));
  if (!trace.level(n - 4).contains(mask_of({3})))
    throw Error(Errc::DisagreementFound,
                "{3} must be in the (n-4)-th closure of the path family");
  if (trace.level(n - 4).contains(mask_of({1, 3, 4})))
    throw Error(Errc::DisagreementFound,
                "{1,3,4} must be outside the (n-4)-th closure");
  const SetFamily& penultimate = trace.level(n - 2);
  if (penultimate.is_power_set() || !is_up_set(penultimate))
    throw Error(Errc::DisagreementFound,
                "the (n-2)-nd closure of the path family must be a proper "
                "up-set");
  return reports;
}

}  // namespace ucf
