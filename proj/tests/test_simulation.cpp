#include <cmath>

#include "doctest.h"
#include "recog/builtins.hpp"
#include "recog/simulation.hpp"
#include "recog/tournament.hpp"
#include "test_support.hpp"

using namespace recog;

TEST_SUITE_BEGIN("simulation");

TEST_CASE("monus and sg") {
    CHECK(monus(3, 1) == 2);
    CHECK(monus(1, 3) == 0);
    CHECK(monus(7, 7) == 0);
    CHECK(sg(2) == 1);
    CHECK(sg(0) == 0);
    CHECK(sg(-5) == 0);
}

TEST_CASE("sg of monus is the strict comparator") {
    for (std::int64_t p = -5; p <= 5; ++p) {
        for (std::int64_t q = -5; q <= 5; ++q) {
            CHECK(sg(monus(p, q)) == (p > q ? 1 : 0));
        }
    }
}

TEST_CASE("exact expectations") {
    const Universe u = theorem1_universe();
    const Distribution uniform = Distribution::uniform(u);
    const DecisionTree a = algorithm_a();
    const DecisionTree b = algorithm_b();

    CHECK(expected_wins(a, b, uniform, u, 100) == Rational(64));
    CHECK(expected_wins(b, a, uniform, u, 25) == Rational(8));
    CHECK(expected_wins(a, a, uniform, u, 1000) == Rational(0));

    SUBCASE("identity with the win count, exactly") {
        const auto [v_ab, v_ba] = pairwise_wins(a, b, u);
        for (std::int64_t n : {1ll, 25ll, 100ll, 10000ll}) {
            CHECK(expected_wins(a, b, uniform, u, n) * 25 == Rational(16) * n);
            CHECK(expected_wins(a, b, uniform, u, n) ==
                  Rational(v_ab, u.pattern_count()) * n);
            CHECK(expected_wins(b, a, uniform, u, n) ==
                  Rational(v_ba, u.pattern_count()) * n);
        }
    }
    SUBCASE("time homogeneity") {
        const Rational per_step = expected_wins(a, b, uniform, u, 1);
        CHECK(expected_wins(a, b, uniform, u, 137) == per_step * 137);
    }
    SUBCASE("a distribution concentrated on one image") {
        // All mass on a2, where B is faster: A never wins a step.
        std::vector<Rational> weights(u.patterns().size(), 0);
        for (std::size_t i = 0; i < u.patterns().size(); ++i) {
            if (u.image_of(i) == 2) weights[i] = Rational(1, 8);
        }
        const Distribution on_a2 = Distribution::from_weights(u, weights);
        CHECK(expected_wins(a, b, on_a2, u, 50) == Rational(0));
        CHECK(expected_wins(b, a, on_a2, u, 50) == Rational(50));
    }
    SUBCASE("guards") {
        CHECK_THROWS_AS(expected_wins(a, b, uniform, u, 0), DomainError);
        std::vector<Rational> bad(u.patterns().size(), 0);
        bad[0] = Rational(1, 2);
        CHECK_THROWS_AS(Distribution::from_weights(u, bad), DomainError);
        bad[0] = Rational(-1);
        CHECK_THROWS_AS(Distribution::from_weights(u, bad), DomainError);
        CHECK_THROWS_AS(Distribution::from_weights(u, {}), DomainError);
    }
}

TEST_CASE("simulation determinism and degenerate cases") {
    const Universe u = theorem1_universe();
    const Distribution uniform = Distribution::uniform(u);
    const DecisionTree a = algorithm_a();
    const DecisionTree b = algorithm_b();

    const SimulationReport r1 = simulate(a, b, uniform, u, 500, 3, 42);
    const SimulationReport r2 = simulate(a, b, uniform, u, 500, 3, 42);
    CHECK(r1.win_count == r2.win_count);
    CHECK(r1.empirical_win_fraction == r2.empirical_win_fraction);

    const SimulationReport other = simulate(a, b, uniform, u, 500, 3, 43);
    CHECK(other.win_count != r1.win_count);  // astronomically unlikely to tie

    const SimulationReport self = simulate(a, a, uniform, u, 200, 1, 7);
    CHECK(self.win_count == 0);
    CHECK(self.empirical_win_fraction == 0.0);

    CHECK_THROWS_AS(simulate(a, b, uniform, u, 0, 1, 1), DomainError);
    CHECK_THROWS_AS(simulate(a, b, uniform, u, 10, 0, 1), DomainError);
}

TEST_CASE("empirical fractions concentrate near the exact value") {
    const Universe u = theorem1_universe();
    const Distribution uniform = Distribution::uniform(u);
    const DecisionTree a = algorithm_a();
    const DecisionTree b = algorithm_b();

    const double exact = 16.0 / 25.0;
    const double band = 3.0 * std::sqrt(exact * (1.0 - exact) / 10000.0);
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        const SimulationReport r = simulate(a, b, uniform, u, 10000, 1, seed);
        CHECK(std::abs(r.empirical_win_fraction - exact) <= band);
        CHECK(r.standard_error == doctest::Approx(band / 3.0));
    }
}

TEST_SUITE_END();
