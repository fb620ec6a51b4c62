#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "recog/bigint.hpp"
#include "recog/tree.hpp"

namespace recog {

enum class Relation { FirstBetter, SecondBetter, Equivalent };

const char* relation_name(Relation r);

struct PreferenceOutcome {
    Relation relation = Relation::Equivalent;
    std::uint64_t first_wins = 0;   // patterns where the first tree is strictly faster
    std::uint64_t second_wins = 0;
    std::uint64_t ties = 0;
};

// (V(a,b), V(b,a)) by strict per-pattern time comparison over all of u.
// Throws IncorrectTreeError when either tree misclassifies.
std::pair<std::uint64_t, std::uint64_t> pairwise_wins(const DecisionTree& a,
                                                      const DecisionTree& b,
                                                      const Universe& u);

PreferenceOutcome compare(const DecisionTree& a, const DecisionTree& b, const Universe& u);

struct TournamentMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<std::uint64_t>> wins;  // wins[i][j] = V(i over j)
    std::uint64_t universe_size = 0;

    std::uint64_t tie_count(std::size_t i, std::size_t j) const;
    PreferenceOutcome outcome(std::size_t i, std::size_t j) const;
    std::string to_text() const;
    std::string to_csv() const;
};

TournamentMatrix tournament(std::span<const LabeledTree> algorithms, const Universe& u);

struct CycleStep {
    std::string from;
    std::string to;
    BigInt wins_forward;   // V(from, to)
    BigInt wins_backward;  // V(to, from)
    bool better = false;   // from is strictly better than to
};

struct CycleReport {
    bool ok = false;
    std::vector<CycleStep> steps;

    std::string to_text() const;
};

// Checks that each algorithm is better than its successor and the last is
// better than the first. DomainError when fewer than two algorithms.
CycleReport verify_cycle(std::span<const LabeledTree> algorithms, const Universe& u);

// (V(A_p, A_q), V(A_q, A_p)) for the spine family of parameter n, computed
// from the per-image time formula and exact image sizes, never expanding.
std::pair<BigInt, BigInt> image_level_wins(int n, int p, int q);

// verify_cycle for the full spine family A_0..A_{n-1}, image level.
CycleReport verify_cycle_image_level(int n);

// One row per image, one column per algorithm; cells rendered by
// render_times.
struct TimeTable {
    std::vector<std::string> row_names;
    std::vector<std::string> col_names;
    std::vector<std::vector<std::string>> cells;

    std::string to_text() const;
    std::string to_csv() const;
};

TimeTable render_time_table(std::span<const LabeledTree> algorithms, const Universe& u);

}  // namespace recog
