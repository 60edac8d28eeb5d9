#include <catch_amalgamated.hpp>

#include "test_support.hpp"
#include "ucf/classification.hpp"
#include "ucf/enumerate.hpp"

using namespace ucf;
using ucf_test::family_of;

TEST_CASE("lift classification, base {{1}} lifted into [3]") {
  const SetFamily base = family_of(1, {0b1});
  const LiftClassifier classifier(base, 3);

  SECTION("outside part proper and small inside part: case (vi), out") {
    const CaseReport r = classifier.classify(mask_of({2}), 1);
    CHECK(r.case_index == 6);
    CHECK_FALSE(r.predicted_member);
    CHECK_FALSE(r.computed_member);
    CHECK(r.agrees);
  }
  SECTION("outside part proper and large inside part: case (v), in") {
    const CaseReport r = classifier.classify(mask_of({1, 2}), 1);
    CHECK(r.case_index == 5);
    CHECK(r.predicted_member);
    CHECK(r.computed_member);
  }
  SECTION("the universe lands in the vacuous-quantifier case (iii)") {
    const CaseReport r = classifier.classify(full_mask(3), 1);
    CHECK(r.case_index == 3);
    CHECK(r.predicted_member);
  }
  SECTION("level bounds") {
    CHECK_THROWS_AS(classifier.classify(0b1, 0), Error);
    CHECK_THROWS_AS(classifier.classify(0b1, 2), Error);
  }
}

TEST_CASE("lift case split is a partition of each branch") {
  const SetFamily base = chain_family(3);
  const LiftClassifier classifier(base, 5);
  const Mask block = full_mask(5) & ~prefix_mask(3);
  for (int t = 1; t <= 3; ++t) {
    for (Mask a = 1; a <= full_mask(5); ++a) {
      const CaseReport r = classifier.classify(a, t);
      const Mask outside = a & block;
      if (outside == 0) {
        CHECK((r.case_index == 1 || r.case_index == 2));
      } else if (outside == block) {
        CHECK((r.case_index == 3 || r.case_index == 4));
      } else {
        CHECK((r.case_index == 5 || r.case_index == 6));
      }
    }
  }
}

TEST_CASE("verify_lift sweeps") {
  SECTION("single-set base into [3]") {
    const auto reports = verify_lift(family_of(1, {0b1}), 3);
    CHECK(reports.size() == 7);  // 2^3-1 subjects at the single level t=1
    for (const CaseReport& r : reports) CHECK(r.agrees);
  }
  SECTION("power set over [2] into [4]") {
    CHECK_NOTHROW(verify_lift(power_set_family(2), 4));
    CHECK(density(lifted_family(power_set_family(2), 4)) == 3);
  }
  SECTION("chain over [3] into [6]") {
    CHECK_NOTHROW(verify_lift(chain_family(3), 6));
    CHECK(density(lifted_family(chain_family(3), 6)) == 4);
  }
  SECTION("every base with k <= 2, extensions up to k+4") {
    for (int k = 1; k <= 2; ++k) {
      for_each_union_closed(k, [&](const SetFamily& base) {
        for (int n = k + 2; n <= k + 4; ++n) CHECK_NOTHROW(verify_lift(base, n));
        return true;
      });
    }
  }
}

TEST_CASE("path classification spot subjects at n = 6, depth 1") {
  const PathClassifier classifier(6);

  SECTION("leading element without its neighbor: case (i), out") {
    const CaseReport r = classifier.classify(mask_of({1, 3, 4, 5}), 1);
    CHECK(r.matched_cases == std::vector<int>{1});
    CHECK_FALSE(r.predicted_member);
    CHECK_FALSE(r.computed_member);
    CHECK(r.case_label() == "(i)");
  }
  SECTION("full-size prefix block: case (iii), in") {
    const CaseReport r = classifier.classify(mask_of({1, 2, 3, 5}), 1);
    CHECK(r.case_index == 3);
    CHECK(r.predicted_member);
    CHECK(r.computed_member);
  }
  SECTION("suffix block mirror: case (iv), in") {
    const CaseReport r = classifier.classify(mask_of({2, 4, 5, 6}), 1);
    CHECK(r.case_index == 4);
    CHECK(r.predicted_member);
    CHECK(r.computed_member);
  }
  SECTION("touching both ends one size down: case (ix), out") {
    const CaseReport r = classifier.classify(mask_of({2, 3, 5}), 1);
    CHECK(r.case_index == 9);
    CHECK_FALSE(r.predicted_member);
    CHECK_FALSE(r.computed_member);
  }
  SECTION("tiny sets: case (xiv), out") {
    const CaseReport r = classifier.classify(mask_of({3}), 1);
    CHECK(r.matched_cases == std::vector<int>{14});
    CHECK_FALSE(r.predicted_member);
    CHECK_FALSE(r.computed_member);
  }
  SECTION("a tiny set at the start matches both (i) and (xiv), agreeing") {
    const CaseReport r = classifier.classify(mask_of({1}), 1);
    CHECK(r.matched_cases == std::vector<int>{1, 14});
    CHECK_FALSE(r.predicted_member);
    CHECK(r.agrees);
  }
  SECTION("members and oversized subjects are rejected") {
    CHECK_THROWS_AS(classifier.classify(mask_of({1, 2}), 1), Error);
    CHECK_THROWS_AS(classifier.classify(mask_of({1, 3, 4, 5, 6}), 1), Error);
    CHECK_THROWS_AS(classifier.classify(mask_of({1}), 2), Error);  // k > n-5
  }
}

TEST_CASE("path classification: matched cases never disagree among themselves") {
  for (int n : {6, 7}) {
    const PathClassifier classifier(n);
    for (int k = 1; k <= n - 5; ++k) {
      for (Mask a = 1; a <= full_mask(n); ++a) {
        if (classifier.family().contains(a) || set_size(a) > n - k - 1) continue;
        const CaseReport r = classifier.classify(a, k);  // throws on mixed
        CHECK_FALSE(r.matched_cases.empty());
        CHECK(r.agrees);
      }
    }
  }
}

TEST_CASE("verify_path sweeps") {
  SECTION("n = 6") {
    const auto reports = verify_path(6);
    CHECK(!reports.empty());
    for (const CaseReport& r : reports) CHECK(r.agrees);
  }
  SECTION("n = 7, both depths") {
    CHECK_NOTHROW(verify_path(7));
  }
  SECTION("depth cap is honored") {
    const auto reports = verify_path(7, 1);
    for (const CaseReport& r : reports) CHECK(r.level == 1);
  }
  SECTION("needs n >= 6") {
    CHECK_THROWS_AS(verify_path(5), Error);
  }
}

TEST_CASE("isolated interior elements appear from n = 9 on and are classified") {
  // {3,5,7} inside {3..7}: 5 is isolated between 3 and 7
  const PathClassifier classifier(9);
  const CaseReport r = classifier.classify(mask_of({3, 5, 7}), 4);
  CHECK(std::find(r.matched_cases.begin(), r.matched_cases.end(), 12) !=
        r.matched_cases.end());
  CHECK_FALSE(r.predicted_member);
  CHECK(r.agrees);
}
