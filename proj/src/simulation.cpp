#include "recog/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace recog {

Distribution Distribution::uniform(const Universe& u) {
    const std::uint64_t count = u.patterns().size();
    return from_weights(u, std::vector<Rational>(count, Rational(1, count)));
}

Distribution Distribution::from_weights(const Universe& u, std::vector<Rational> by_ordinal) {
    if (by_ordinal.size() != u.patterns().size()) {
        throw DomainError("distribution: " + std::to_string(by_ordinal.size()) +
                          " weights for " + std::to_string(u.patterns().size()) + " patterns");
    }
    Rational sum = 0;
    for (const Rational& w : by_ordinal) {
        if (w < 0) throw DomainError("distribution: negative weight");
        sum += w;
    }
    const Rational tolerance(1, 1000000000000ll);
    if (boost::multiprecision::abs(sum - 1) > tolerance) {
        throw DomainError("distribution: weights sum to " + sum.str() + ", not 1");
    }
    Distribution dist;
    dist.weights_ = std::move(by_ordinal);
    dist.cumulative_.reserve(dist.weights_.size());
    double running = 0.0;
    for (const Rational& w : dist.weights_) {
        running += static_cast<double>(w);
        dist.cumulative_.push_back(running);
    }
    return dist;
}

std::size_t Distribution::sample(double u01) const {
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u01);
    const std::size_t idx = static_cast<std::size_t>(it - cumulative_.begin());
    return std::min(idx, cumulative_.size() - 1);
}

Rational expected_wins(const DecisionTree& a, const DecisionTree& b, const Distribution& dist,
                       const Universe& u, std::int64_t steps) {
    if (steps < 1) throw DomainError("expected_wins: steps must be >= 1");
    if (dist.weights().size() != u.patterns().size()) {
        throw DomainError("expected_wins: distribution does not match the universe");
    }
    const TimeProfile ta = time_profile(a, u);
    const TimeProfile tb = time_profile(b, u);
    Rational per_step = 0;
    for (std::size_t i = 0; i < dist.weights().size(); ++i) {
        if (sg(monus(tb.by_ordinal[i], ta.by_ordinal[i]))) per_step += dist.weights()[i];
    }
    return per_step * steps;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Uniform in [0,1) from the top 53 bits; identical on every platform.
double unit_double(std::uint64_t word) {
    return static_cast<double>(word >> 11) * 0x1.0p-53;
}

}  // namespace

SimulationReport simulate(const DecisionTree& a, const DecisionTree& b, const Distribution& dist,
                          const Universe& u, std::int64_t steps, int trials,
                          std::uint64_t seed) {
    if (steps < 1) throw DomainError("simulate: steps must be >= 1");
    if (trials < 1) throw DomainError("simulate: trials must be >= 1");
    const TimeProfile ta = time_profile(a, u);
    const TimeProfile tb = time_profile(b, u);

    SimulationReport report;
    report.steps = steps;
    report.trials = trials;
    report.seed = seed;
    report.exact_expectation = expected_wins(a, b, dist, u, steps);

    for (int trial = 0; trial < trials; ++trial) {
        std::mt19937_64 engine(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(trial))));
        for (std::int64_t s = 0; s < steps; ++s) {
            const std::size_t ord = dist.sample(unit_double(engine()));
            if (ta.by_ordinal[ord] < tb.by_ordinal[ord]) ++report.win_count;
        }
    }
    const double draws = static_cast<double>(steps) * trials;
    report.empirical_win_fraction = static_cast<double>(report.win_count) / draws;
    const double p = static_cast<double>(report.exact_expectation / steps);
    report.standard_error = std::sqrt(p * (1.0 - p) / draws);
    return report;
}

}  // namespace recog
