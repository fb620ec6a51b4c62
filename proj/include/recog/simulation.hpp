#pragma once

#include <cstdint>
#include <vector>

#include "recog/bigint.hpp"
#include "recog/tree.hpp"

namespace recog {

// Truncated subtraction: a - b when a >= b, else 0.
constexpr std::int64_t monus(std::int64_t a, std::int64_t b) { return a > b ? a - b : 0; }

// Indicator of positivity.
constexpr int sg(std::int64_t a) { return a > 0 ? 1 : 0; }

// A time-homogeneous distribution over the patterns of an expanded
// universe. Weights are exact rationals so expectations stay exact.
class Distribution {
public:
    static Distribution uniform(const Universe& u);

    // One weight per pattern ordinal. DomainError when a weight is
    // negative or the sum differs from 1 by more than 1e-12.
    static Distribution from_weights(const Universe& u, std::vector<Rational> by_ordinal);

    const std::vector<Rational>& weights() const { return weights_; }

    // Ordinal drawn by inverse CDF from a uniform variate in [0,1).
    std::size_t sample(double u01) const;

private:
    std::vector<Rational> weights_;
    std::vector<double> cumulative_;
};

// Exact expectation of the number of steps, out of `steps` independent
// draws from dist, on which `a` is strictly faster than `b`:
//   steps * sum over x of w(x) * sg(T(b,x) monus T(a,x)).
// For the uniform distribution this equals steps * V(a,b) / |U|.
Rational expected_wins(const DecisionTree& a, const DecisionTree& b, const Distribution& dist,
                       const Universe& u, std::int64_t steps);

struct SimulationReport {
    std::int64_t steps = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t win_count = 0;          // over all steps of all trials
    double empirical_win_fraction = 0.0;  // win_count / (steps * trials)
    Rational exact_expectation;           // expected wins per trial
    double standard_error = 0.0;          // binomial, at the exact win probability
};

// Draws `trials` independent sequences of `steps` patterns from dist with
// a seeded deterministic generator (mt19937_64; per-trial streams derived
// by splitmix64) and counts the steps where `a` beats `b`. Identical
// arguments give bit-identical reports.
SimulationReport simulate(const DecisionTree& a, const DecisionTree& b, const Distribution& dist,
                          const Universe& u, std::int64_t steps, int trials, std::uint64_t seed);

}  // namespace recog
