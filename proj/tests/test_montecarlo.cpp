#include "doctest.h"

#include "oracles.hpp"
#include "vdw/montecarlo.hpp"

using namespace vdw;

TEST_CASE("threshold exponent") {
    CHECK(threshold_exponent(3, 3) == doctest::Approx(0.5));
    CHECK(threshold_exponent(4, 3) == doctest::Approx(3.0 / 8.0));
    CHECK(threshold_exponent(ColorSpec({3, 3})) == doctest::Approx(0.5));
    CHECK(threshold_exponent(ColorSpec({5, 4, 3})) == doctest::Approx(4.0 / 15.0));
    CHECK(p_from_c(2.0, 4, ColorSpec({3, 3})) == doctest::Approx(1.0));  // clamped
}

TEST_CASE("wilson interval") {
    const auto all = wilson_interval(50, 50);
    CHECK(all.high == doctest::Approx(1.0));
    CHECK(all.low > 0.9);
    const auto none = wilson_interval(0, 50);
    CHECK(none.low == doctest::Approx(0.0));
    CHECK(none.high < 0.1);
    const auto half = wilson_interval(25, 50);
    CHECK(half.low < 0.5);
    CHECK(half.high > 0.5);
}

TEST_CASE("isolation_stats") {
    SUBCASE("empty subset") {
        const auto s = isolation_stats(GroundSubset(16, {}), 4, 3);
        CHECK(s.q_size == 0);
        CHECK(s.qi_size == 0);
        CHECK(s.mostly_independent);
    }
    SUBCASE("a single 4-AP is isolated") {
        const auto s = isolation_stats(GroundSubset(10, {1, 2, 3, 4}), 4, 3);
        CHECK(s.q_size == 4);
        CHECK(s.qi_size == 4);
        CHECK(s.excess() == 0);
        CHECK(s.mostly_independent);
        CHECK(s.delta == doctest::Approx(1.0 / 16.0));
    }
    SUBCASE("[8] packs overlapping 4-APs") {
        // Exhaustive: every 4-AP of [8] shares a vertex with another, so
        // Q = [8] and Q_I is empty.
        const auto aps = aps_in_subset(GroundSubset::full(8), 4);
        CHECK(aps.size() == 7);
        const auto s = isolation_stats(GroundSubset::full(8), 4, 3);
        CHECK(s.q_size == 8);
        CHECK(s.qi_size == 0);
        CHECK(s.excess() == 8);
        CHECK_FALSE(s.mostly_independent);
    }
    SUBCASE("symmetric lengths are rejected") {
        CHECK_THROWS_AS(isolation_stats(GroundSubset::full(8), 3, 3), std::invalid_argument);
    }
}

TEST_CASE("configuration_census") {
    SUBCASE("empty subset") {
        const auto c = configuration_census(GroundSubset(9, {}), ColorSpec({3, 3}), 4);
        CHECK(c.ap_counts.at(3) == 0);
        CHECK(c.q1_pair_overlaps.empty());
        CHECK(c.simple_paths_by_length.empty());
    }
    SUBCASE("[5] symmetric counts fixed by brute force") {
        const auto c = configuration_census(GroundSubset::full(5), ColorSpec({3, 3}), 3);
        CHECK(c.ap_counts.at(3) == 4);
        CHECK(c.q1_pair_overlaps.at(1) == 2);
        CHECK(c.q1_pair_overlaps.at(2) == 4);
        CHECK(c.simple_paths_by_length.at(1) == 4);
        CHECK(c.simple_paths_by_length.at(2) == 2);
        CHECK(c.spoiled_paths == 2);
    }
    SUBCASE("full ground set matches the plain enumeration totals") {
        const auto c = configuration_census(GroundSubset::full(30), ColorSpec({4, 3}), 1);
        CHECK(c.ap_counts.at(4) == count_aps(30, 4));
        CHECK(c.ap_counts.at(3) == count_aps(30, 3));
    }
}

TEST_CASE("ramsey_probability") {
    const ColorSpec spec({3, 3});
    SUBCASE("p = 0 never arrows") {
        const auto est = ramsey_probability(64, spec, 0.0, 20, 7, 100'000);
        CHECK(est.phat == doctest::Approx(0.0));
        CHECK(est.indeterminate == 0);
    }
    SUBCASE("p = 1 at n = 9 always arrows") {
        const auto est = ramsey_probability(9, spec, 1.0, 20, 7, 100'000);
        CHECK(est.phat == doctest::Approx(1.0));
    }
    SUBCASE("all-indeterminate estimation is an explicit failure") {
        CHECK_THROWS_AS(ramsey_probability(27, ColorSpec({3, 3, 3}), 1.0, 3, 5, 1),
                        std::runtime_error);
    }
    SUBCASE("bit-identical across thread counts") {
        const auto a = ramsey_probability(256, spec, 0.05, 40, 99, 1'000'000, 1);
        const auto b = ramsey_probability(256, spec, 0.05, 40, 99, 1'000'000, 2);
        const auto c = ramsey_probability(256, spec, 0.05, 40, 99, 1'000'000, 4);
        CHECK(a.successes == b.successes);
        CHECK(b.successes == c.successes);
        CHECK(a.indeterminate == b.indeterminate);
        CHECK(a.phat == b.phat);
        CHECK(a.ci_low == c.ci_low);
        CHECK(a.ci_high == c.ci_high);
    }
}

TEST_CASE("threshold_sweep") {
    SUBCASE("c = 0 cell never arrows") {
        SweepConfig cfg;
        cfg.n_grid = {64};
        cfg.spec = ColorSpec({3, 3});
        cfg.c_grid = {0.0};
        cfg.trials = 10;
        cfg.master_seed = 5;
        const auto rows = threshold_sweep(cfg);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].phat == doctest::Approx(0.0));
        CHECK(rows[0].p == doctest::Approx(0.0));
        CHECK_FALSE(rows[0].failed);
    }
    SUBCASE("row count and order") {
        SweepConfig cfg;
        cfg.n_grid = {32, 16};
        cfg.spec = ColorSpec({3, 3});
        cfg.c_grid = {1.0, 0.2};
        cfg.trials = 4;
        cfg.master_seed = 5;
        const auto rows = threshold_sweep(cfg);
        REQUIRE(rows.size() == 4);
        CHECK(rows[0].n == 16);
        CHECK(rows[0].c == doctest::Approx(0.2));
        CHECK(rows[1].c == doctest::Approx(1.0));
        CHECK(rows[2].n == 32);
    }
    SUBCASE("phat grows with c up to CI overlap") {
        SweepConfig cfg;
        cfg.n_grid = {128};
        cfg.spec = ColorSpec({3, 3});
        cfg.c_grid = {0.2, 2.0, 8.0};
        cfg.trials = 40;
        cfg.master_seed = 11;
        const auto rows = threshold_sweep(cfg);
        REQUIRE(rows.size() == 3);
        for (std::size_t i = 0; i + 1 < rows.size(); ++i)
            CHECK(rows[i].ci_low <= rows[i + 1].ci_high);
    }
    SUBCASE("censuses aggregate in the sparse regime") {
        SweepConfig cfg;
        cfg.n_grid = {512};
        cfg.spec = ColorSpec({3, 3});
        cfg.c_grid = {0.3};
        cfg.trials = 30;
        cfg.master_seed = 11;
        cfg.collect_census = true;
        cfg.census_max_len = 4;
        const auto rows = threshold_sweep(cfg);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].sum_subset_size > 0);
        CHECK(rows[0].sum_special_cycles >= 0);
    }
    SUBCASE("cells whose trials all drain the budget are flagged, not fatal") {
        SweepConfig cfg;
        cfg.n_grid = {27};
        cfg.spec = ColorSpec({3, 3, 3});
        cfg.c_grid = {100.0};  // p clamps to 1: the full, undecidable-in-1-node set
        cfg.trials = 3;
        cfg.master_seed = 5;
        cfg.budget = 1;
        const auto rows = threshold_sweep(cfg);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].failed);
        CHECK(rows[0].indeterminate == 3);
    }
    SUBCASE("isolation aggregates for asymmetric specs") {
        SweepConfig cfg;
        cfg.n_grid = {256};
        cfg.spec = ColorSpec({4, 3});
        cfg.c_grid = {0.5};
        cfg.trials = 20;
        cfg.master_seed = 3;
        cfg.collect_isolation = true;
        const auto rows = threshold_sweep(cfg);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].mostly_independent_count >= 0);
        CHECK(rows[0].mostly_independent_count <= 20);
    }
    SUBCASE("byte-level determinism across thread counts") {
        SweepConfig cfg;
        cfg.n_grid = {64, 128};
        cfg.spec = ColorSpec({3, 3});
        cfg.c_grid = {0.5, 2.0};
        cfg.trials = 12;
        cfg.master_seed = 77;
        cfg.collect_census = true;
        cfg.census_max_len = 3;
        cfg.threads = 1;
        const auto a = threshold_sweep(cfg);
        cfg.threads = 2;
        const auto b = threshold_sweep(cfg);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].successes == b[i].successes);
            CHECK(a[i].indeterminate == b[i].indeterminate);
            CHECK(a[i].phat == b[i].phat);
            CHECK(a[i].sum_spoiled_paths == b[i].sum_spoiled_paths);
            CHECK(a[i].sum_special_cycles == b[i].sum_special_cycles);
            CHECK(a[i].sum_subset_size == b[i].sum_subset_size);
        }
    }
}
