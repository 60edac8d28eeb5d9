#include <catch_amalgamated.hpp>

#include "test_support.hpp"
#include "ucf/closure.hpp"
#include "ucf/constructions.hpp"
#include "ucf/enumerate.hpp"

using namespace ucf;
using ucf_test::closure_by_definition;
using ucf_test::family_of;

TEST_CASE("closure kernel matches the definition-literal oracle") {
  SECTION("exhaustively for every union-closed family at n <= 4") {
    for (int n = 1; n <= 4; ++n) {
      for_each_union_closed(n, [&](const SetFamily& f) {
        CHECK(closure(f) == closure_by_definition(f));
        return true;
      });
    }
  }
  SECTION("sampled at n = 5, 6") {
    std::mt19937 rng(23);
    for (int round = 0; round < 25; ++round) {
      const SetFamily f = ucf_test::random_union_closed(rng, 5 + round % 2);
      CHECK(closure(f) == closure_by_definition(f));
    }
  }
}

TEST_CASE("closure basics") {
  SECTION("power set is the unique fixed point") {
    for (int n = 1; n <= 6; ++n)
      CHECK(closure(power_set_family(n)) == power_set_family(n));
  }
  SECTION("closure of the prefix chain over [3]") {
    CHECK(closure(chain_family(3)) ==
          family_of(3, {0b001, 0b010, 0b011, 0b101, 0b110, 0b111}));
  }
  SECTION("closure of a proper up-set is the power set") {
    const SetFamily up = family_of(3, {0b001, 0b011, 0b101, 0b111});
    CHECK(closure(up) == power_set_family(3));
  }
  SECTION("rejects non-union-closed input") {
    CHECK_THROWS_AS(closure(family_of(3, {0b001, 0b010, 0b111})), Error);
  }
  SECTION("rejects oversized universes") {
    CHECK_THROWS_AS(closure(family_of(21, {full_mask(21)})), Error);
  }
  SECTION("identical results under a worker cap") {
    runtime::set_max_threads(4);
    const SetFamily f = path_family(13);
    CHECK(closure(f) == [&] {
      runtime::set_max_threads(1);
      return closure(f);
    }());
    runtime::set_max_threads(1);
  }
}

TEST_CASE("iterated_closure") {
  const SetFamily chain3 = chain_family(3);
  CHECK(iterated_closure(chain3, 0) == chain3);
  CHECK(iterated_closure(chain3, 1) == closure(chain3));
  CHECK(iterated_closure(chain3, 2) == power_set_family(3));
  CHECK(iterated_closure(chain3, 7) == power_set_family(3));  // saturates
  CHECK_THROWS_AS(iterated_closure(chain3, -1), Error);

  SECTION("density many steps always reach the power set") {
    std::mt19937 rng(5);
    for (int round = 0; round < 20; ++round) {
      const SetFamily f = ucf_test::random_union_closed(rng, 4 + round % 3);
      CHECK(iterated_closure(f, density(f)) ==
            power_set_family(f.universe()));
    }
  }
}

TEST_CASE("closure_trace") {
  SECTION("power set has a one-level trace") {
    const ClosureTrace trace = closure_trace(power_set_family(3));
    CHECK(trace.levels.size() == 1);
    CHECK(trace.density() == 0);
  }
  SECTION("chain over [4] is 3-dense") {
    CHECK(closure_trace(chain_family(4)).density() == 3);
  }
  SECTION("path family over [6] is 5-dense") {
    CHECK(closure_trace(path_family(6)).density() == 5);
  }
  SECTION("levels grow strictly and stay union-closed") {
    const ClosureTrace trace = closure_trace(chain_family(5));
    for (std::size_t i = 0; i + 1 < trace.levels.size(); ++i) {
      CHECK(trace.levels[i].subfamily_of(trace.levels[i + 1]));
      CHECK(trace.levels[i].size() < trace.levels[i + 1].size());
      CHECK(is_union_closed(trace.levels[i]));
    }
    CHECK(trace.levels.back().is_power_set());
  }
  SECTION("density of the closure drops by one") {
    for_each_union_closed(4, [&](const SetFamily& f) {
      if (!f.is_power_set()) CHECK(density(closure(f)) == density(f) - 1);
      return true;
    });
  }
}

TEST_CASE("density") {
  CHECK(density(power_set_family(4)) == 0);
  CHECK(density(family_of(3, {0b001, 0b011, 0b101, 0b111})) == 1);
  CHECK(density(interval_chain_family(1, 3, 5)) == 3);
}

TEST_CASE("min_full_level") {
  CHECK(min_full_level(power_set_family(4)) == 1);
  CHECK(min_full_level(chain_family(3)) == 3);

  SECTION("k closure steps fill level n-k") {
    for_each_union_closed(4, [&](const SetFamily& f) {
      const ClosureTrace trace = closure_trace(f);
      for (int k = 0; k <= 3; ++k)
        CHECK(min_full_level(trace.level(k)) <= 4 - k);
      return true;
    });
  }
  SECTION("the full level drops by at least one per step while above 1") {
    const ClosureTrace trace = closure_trace(chain_family(6));
    for (std::size_t i = 0; i + 1 < trace.levels.size(); ++i) {
      const int before = min_full_level(trace.levels[i]);
      if (before >= 2)
        CHECK(min_full_level(trace.levels[i + 1]) <= before - 1);
    }
  }
}

TEST_CASE("s_param") {
  SECTION("1-dense families have no capped chain") {
    CHECK(s_param(family_of(3, {0b001, 0b011, 0b101, 0b111})) == 0);
    CHECK(s_param(family_of(2, {0b11})) == 0);
  }
  SECTION("five-member bound-gap family has s = 1") {
    CHECK(s_param(bound_gap_family(5)) == 1);
    CHECK(s_param(bound_gap_family(7)) == 1);
  }
  SECTION("chain over [n] has s = n-2, confirmed by brute force at n = 5") {
    for (int n = 3; n <= 7; ++n) CHECK(s_param(chain_family(n)) == n - 2);
    CHECK(ucf_test::s_by_bruteforce(chain_family(5)) == 3);
  }
  SECTION("power set has s = 0") {
    CHECK(s_param(power_set_family(3)) == 0);
  }
  SECTION("matches the chain-search oracle") {
    for_each_union_closed(4, [&](const SetFamily& f) {
      CHECK(s_param(f) == ucf_test::s_by_bruteforce(f));
      return true;
    });
    std::mt19937 rng(31);
    for (int round = 0; round < 15; ++round) {
      const SetFamily f = ucf_test::random_union_closed(rng, 5);
      CHECK(s_param(f) == ucf_test::s_by_bruteforce(f));
    }
  }
}

TEST_CASE("density_report") {
  SECTION("chain attains its bound") {
    const DensityReport r = density_report(chain_family(6));
    CHECK(r.density == 5);
    CHECK(r.s_param == 4);
    CHECK(r.lower_bound == 5);
    CHECK(r.bound_tight);
  }
  SECTION("bound-gap family misses its bound by n-3") {
    const DensityReport r = density_report(bound_gap_family(6));
    CHECK(r.density == 5);
    CHECK(r.s_param == 1);
    CHECK_FALSE(r.bound_tight);
  }
  SECTION("power set") {
    const DensityReport r = density_report(power_set_family(3));
    CHECK(r.density == 0);
    CHECK(r.s_param == 0);
  }
  SECTION("the bound holds everywhere below the power set") {
    for_each_union_closed(4, [&](const SetFamily& f) {
      const DensityReport r = density_report(f);
      if (!f.is_power_set()) CHECK(r.lower_bound <= r.density);
      return true;
    });
  }
}
