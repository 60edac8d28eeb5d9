#include <catch_amalgamated.hpp>

#include "test_support.hpp"
#include "ucf/analysis.hpp"
#include "ucf/constructions.hpp"
#include "ucf/relative.hpp"

using namespace ucf;
using ucf_test::family_of;

TEST_CASE("frankl_check") {
  SECTION("chain: element 1 is in every member") {
    const FranklResult r = frankl_check(chain_family(3));
    CHECK(r.element == 1);
    CHECK(r.count == 3);
    CHECK(r.satisfied);
  }
  SECTION("power set: 4 of 7 members carry any fixed element") {
    const FranklResult r = frankl_check(power_set_family(3));
    CHECK(r.count == 4);
    CHECK(r.satisfied);
  }
  SECTION("both thresholds, exhaustively at n <= 3") {
    for (int n = 1; n <= 3; ++n) {
      for_each_union_closed(n, [&](const SetFamily& f) {
        CHECK(frankl_check(f, FranklThreshold::FloorHalf).satisfied);
        CHECK(frankl_check(f, FranklThreshold::StrictHalf).satisfied);
        return true;
      });
    }
  }
  SECTION("threshold arithmetic") {
    const FranklResult r = frankl_check(bound_gap_family(5));
    // 5 members; element 1 is in 4 of them
    CHECK(r.count == 4);
    CHECK(r.satisfied);  // 4 >= floor(5/2)
  }
}

TEST_CASE("g_value is exact") {
  CHECK(g_value(chain_family(5)) == Ratio(1));
  for (int n = 2; n <= 6; ++n)
    CHECK(g_value(power_set_family(n)) ==
          Ratio(1LL << (n - 1), (1LL << n) - 1));
  CHECK(g_value(cube_plus_universe(6)) == Ratio(9, 16));
}

TEST_CASE("g can increase under closure") {
  SECTION("the cube-plus-universe family at n = 6") {
    const GMonotonicityProbe probe = g_monotonicity_probe(cube_plus_universe(6));
    CHECK(probe.g_input == Ratio(9, 16));
    CHECK(probe.g_closure == Ratio(7, 11));
    CHECK_FALSE(probe.decreased);
  }
  SECTION("an up-set closes to the power set") {
    const SetFamily up = family_of(3, {0b001, 0b011, 0b101, 0b111});
    CHECK(g_monotonicity_probe(up).g_closure == Ratio(4, 7));
  }
  SECTION("chain over [3] keeps g = 1 on both sides? no: closure dilutes") {
    const GMonotonicityProbe probe = g_monotonicity_probe(chain_family(3));
    CHECK(probe.g_input == Ratio(1));
    CHECK(probe.g_closure == Ratio(4, 6));
    CHECK(probe.decreased);
  }
  SECTION("the power set is rejected") {
    CHECK_THROWS_AS(g_monotonicity_probe(power_set_family(3)), Error);
  }
}

TEST_CASE("enumerate_union_closed") {
  SECTION("n = 1: a single family") {
    const auto all = enumerate_union_closed(1);
    REQUIRE(all.size() == 1);
    CHECK(all.front() == power_set_family(1));
  }
  SECTION("n = 2: exactly four families") {
    const auto all = enumerate_union_closed(2);
    REQUIRE(all.size() == 4);
    CHECK(all.front() == power_set_family(2));  // include-first order
    CHECK(all.back() == family_of(2, {0b11}));
    for (const SetFamily& f : all) CHECK(is_union_closed(f));
  }
  SECTION("regression counts, first derived by this enumeration") {
    CHECK(count_union_closed(3) == 45);
    CHECK(count_union_closed(4) == 2271);
  }
  SECTION("the long-run flag unlocks n = 5") {
    CHECK(count_union_closed(5, true) == 1373701);
  }
  SECTION("generate-and-filter oracle agrees at n <= 3") {
    for (int n = 1; n <= 3; ++n) {
      std::set<std::vector<Mask>> expected;
      const Mask full = full_mask(n);
      const std::uint32_t slots = full - 1;
      for (std::uint32_t choice = 0; choice < (1u << slots); ++choice) {
        std::vector<Mask> sets{full};
        for (Mask m = 1; m < full; ++m)
          if (choice & (1u << (m - 1))) sets.push_back(m);
        const SetFamily f = make_family(n, std::move(sets));
        if (is_union_closed(f)) expected.insert(f.members());
      }
      std::set<std::vector<Mask>> got;
      for (const SetFamily& f : enumerate_union_closed(n))
        got.insert(f.members());
      CHECK(got == expected);
    }
  }
  SECTION("cap without the long-run flag") {
    CHECK_THROWS_AS(enumerate_union_closed(5), Error);
  }
}

TEST_CASE("density_census") {
  SECTION("n = 2: one 0-dense, three 1-dense") {
    const DensityCensus census = density_census(2);
    CHECK(census.total == 4);
    CHECK(census.labelled_counts.at(0) == 1);
    CHECK(census.labelled_counts.at(1) == 3);
    CHECK(census.leaf_counts.at(1) == 3);  // everything closes to the root
    CHECK(census.f_values == std::vector<std::uint64_t>{1, 1, 4});
    CHECK(census.a_values.at(0) == Ratio(2, 3));
    CHECK(census.a_values.at(1) == Ratio(1));
  }
  SECTION("the reported minimum-g table matches a_value") {
    for (int n = 2; n <= 4; ++n) {
      const DensityCensus census = density_census(n);
      for (const auto& [k, g] : census.a_values) CHECK(g == a_value(k, n));
    }
  }
  SECTION("lift lower bound holds at n = 3 and 4 (checked internally)") {
    const DensityCensus c3 = density_census(3);
    CHECK(c3.labelled_counts.at(2) >= 3);   // C(3,1) * f_1
    CHECK(c3.labelled_counts.at(0) == 1);
    const DensityCensus c4 = density_census(4);
    CHECK(c4.labelled_counts.at(3) >= 24);  // C(4,2) * f_2
    std::uint64_t sum = 0;
    for (const auto& [d, count] : c4.labelled_counts) sum += count;
    CHECK(sum == c4.total);
    for (const auto& [d, count] : c4.iso_counts)
      CHECK(count <= c4.labelled_counts.at(d));
  }
}

TEST_CASE("a_value") {
  SECTION("only the power set is 0-dense") {
    for (int n = 2; n <= 4; ++n)
      CHECK(a_value(0, n) == Ratio(1LL << (n - 1), (1LL << n) - 1));
  }
  SECTION("a_{1,2} over the three proper up-sets") {
    CHECK(a_value(1, 2) == Ratio(1));
  }
  SECTION("reported, never asserted monotone: the table simply exists") {
    for (int k = 0; k <= 3; ++k) CHECK(a_value(k, 4) > Ratio(0));
  }
  SECTION("missing density") {
    CHECK_THROWS_AS(a_value(4, 4), Error);
  }
}

TEST_CASE("closure_tree") {
  SECTION("n = 2") {
    const ClosureTree tree = closure_tree(2);
    CHECK(tree.nodes.size() == 4);
    CHECK(tree.depth == 1);
    CHECK(tree.nodes[static_cast<std::size_t>(tree.root)].is_power_set());
    CHECK(tree.parent[static_cast<std::size_t>(tree.root)] == tree.root);
    CHECK(tree.leaves.size() == 3);
  }
  SECTION("n = 3: the chain realizes depth 2") {
    const ClosureTree tree = closure_tree(3);
    CHECK(tree.depth == 2);
  }
  SECTION("parent edges drop density by one") {
    const ClosureTree tree = closure_tree(3);
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
      if (static_cast<int>(i) == tree.root) continue;
      CHECK(density(tree.nodes[static_cast<std::size_t>(tree.parent[i])]) ==
            density(tree.nodes[i]) - 1);
    }
  }
  SECTION("families missing a co-singleton are leaves") {
    const ClosureTree tree = closure_tree(3);
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
      const SetFamily& f = tree.nodes[i];
      bool full_level = true;
      for (int e = 1; e <= 3; ++e)
        full_level = full_level && f.contains(without_element(full_mask(3), e));
      if (!full_level)
        CHECK(std::find(tree.leaves.begin(), tree.leaves.end(),
                        static_cast<int>(i)) != tree.leaves.end());
    }
  }
  SECTION("1-dense nodes have a root exactly when they are not leaves") {
    const ClosureTree tree = closure_tree(3);
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
      const SetFamily& f = tree.nodes[i];
      if (f.is_power_set() || !is_up_set(f)) continue;
      const bool leaf = std::find(tree.leaves.begin(), tree.leaves.end(),
                                  static_cast<int>(i)) != tree.leaves.end();
      CHECK(has_closure_root(f).has_root == !leaf);
    }
  }
}
