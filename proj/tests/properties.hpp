#pragma once

// The standalone property bundle. Each check returns a list of failure
// descriptions (empty = pass) so the same code backs both the doctest
// suite and the acceptance runner.

#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "recog/adversary.hpp"
#include "recog/builtins.hpp"
#include "recog/dsl.hpp"
#include "recog/tournament.hpp"
#include "test_support.hpp"

namespace recog::test {

using Failures = std::vector<std::string>;

inline Failures prop_template_expansion_cardinality() {
    Failures bad;
    std::mt19937_64 rng(0xfeedbeef);
    std::uniform_int_distribution<int> length(1, 12);
    std::uniform_int_distribution<int> symbol(0, 2);
    for (int round = 0; round < 300; ++round) {
        std::string text;
        const int len = length(rng);
        for (int i = 0; i < len; ++i) text += "01B"[symbol(rng)];
        const Template t = Template::parse(text);
        const auto pats = t.expand();
        if (pats.size() != (1ull << t.wildcard_count())) {
            bad.push_back("template " + text + ": expansion size " +
                          std::to_string(pats.size()));
            continue;
        }
        std::set<std::uint64_t> distinct;
        for (Pattern p : pats) {
            distinct.insert(p.bits);
            if (!t.contains(p)) bad.push_back("template " + text + ": stray expansion");
        }
        if (distinct.size() != pats.size()) bad.push_back("template " + text + ": duplicates");
    }
    return bad;
}

inline Failures prop_image_disjointness() {
    Failures bad;
    for (int n = 3; n <= 5; ++n) {
        const Universe u = n == 3 ? theorem1_universe() : theorem2_universe(n);
        std::set<std::uint64_t> seen;
        std::uint64_t total = 0;
        for (const Image& img : u.images()) {
            total += img.size;
            for (Pattern p : img.patterns) {
                if (!seen.insert(p.bits).second) {
                    bad.push_back("universe n=" + std::to_string(n) + ": pattern " +
                                  pattern_text(p, u.sign_arity()) + " in two images");
                }
            }
        }
        if (total != u.pattern_count() || seen.size() != u.pattern_count()) {
            bad.push_back("universe n=" + std::to_string(n) + ": size mismatch");
        }
    }
    return bad;
}

inline Failures prop_builtin_correctness() {
    Failures bad;
    const Universe t1 = theorem1_universe();
    for (const auto& [label, tree] : theorem1_algorithms()) {
        if (!check_correct(tree, t1).ok) bad.push_back("algorithm " + label + " misclassifies");
    }
    for (int n = 3; n <= 5; ++n) {
        const Universe u = theorem2_universe(n);
        for (int q = 0; q < n; ++q) {
            if (!check_correct(spine_algorithm(n, q), u).ok) {
                bad.push_back("spine n=" + std::to_string(n) + " q=" + std::to_string(q) +
                              " misclassifies");
            }
        }
    }
    // Symbolic route for the whole range: a template walk that reaches a
    // leaf settles every instantiation at once.
    for (int n = 3; n <= 10; ++n) {
        const Universe u = theorem2_universe(n);
        for (int q = 0; q < n; ++q) {
            const DecisionTree spine = spine_algorithm(n, q);
            for (int j = 0; j <= n; ++j) {
                const auto c = classify_template(spine, u.image(j).templates[0]);
                const int want_time = j < n ? ((j + q) % n) + 1 : n;
                if (!c || c->image != j || c->time != want_time) {
                    bad.push_back("spine n=" + std::to_string(n) + " q=" + std::to_string(q) +
                                  ": template walk of image " + std::to_string(j) + " failed");
                }
            }
        }
    }
    return bad;
}

inline Failures prop_compare_trichotomy_mirror() {
    Failures bad;
    const Universe u = theorem1_universe();
    std::vector<DecisionTree> pool = first_reduced_trees(u, 40);
    pool.push_back(algorithm_b());
    pool.push_back(algorithm_c());
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int round = 0; round < 120; ++round) {
        const DecisionTree& x = pool[pick(rng)];
        const DecisionTree& y = pool[pick(rng)];
        const PreferenceOutcome xy = compare(x, y, u);
        const PreferenceOutcome yx = compare(y, x, u);
        if (xy.first_wins != yx.second_wins || xy.second_wins != yx.first_wins ||
            xy.ties != yx.ties) {
            bad.push_back("mirror symmetry broken");
        }
        const Relation mirrored = xy.relation == Relation::FirstBetter ? Relation::SecondBetter
                                  : xy.relation == Relation::SecondBetter
                                      ? Relation::FirstBetter
                                      : Relation::Equivalent;
        if (yx.relation != mirrored) bad.push_back("relation mirror broken");
        if (xy.first_wins + xy.second_wins + xy.ties != u.pattern_count()) {
            bad.push_back("wins and ties do not partition the universe");
        }
        const bool exactly_one = (xy.relation == Relation::FirstBetter) +
                                     (xy.relation == Relation::SecondBetter) +
                                     (xy.relation == Relation::Equivalent) ==
                                 1;
        if (!exactly_one) bad.push_back("trichotomy broken");
    }
    return bad;
}

inline Failures prop_dp_monotone_in_depth() {
    Failures bad;
    const Universe u = theorem1_universe();
    for (const auto& [label, target] : theorem1_algorithms()) {
        MarginSolver solver(target, u);
        solver.solve();
        for (const auto& [subset, depth] : solver.memoized_states()) {
            if (solver.value(subset, depth) < solver.value(subset, depth + 1)) {
                std::ostringstream msg;
                msg << "target " << label << ": f(S," << depth << ") < f(S," << depth + 1
                    << ") for S=" << std::hex << subset;
                bad.push_back(msg.str());
            }
        }
    }
    return bad;
}

inline Failures prop_enumeration_micro_counts() {
    Failures bad;
    {
        const Universe u = micro_universe_l1();
        if (count_reduced_trees(u) != 1) bad.push_back("L=1 count is not 1");
        if (first_reduced_trees(u, 10).size() != 1) bad.push_back("L=1 stream is not 1 tree");
    }
    {
        const Universe u = micro_universe_l2();
        if (count_reduced_trees(u) != 2) bad.push_back("L=2 count is not 2");
        const auto trees = first_reduced_trees(u, 10);
        if (trees.size() != 2) {
            bad.push_back("L=2 stream is not 2 trees");
        } else {
            for (const DecisionTree& t : trees) {
                if (!check_correct(t, u).ok || !in_enumeration_class(t, u)) {
                    bad.push_back("L=2 streamed tree invalid");
                }
            }
        }
    }
    return bad;
}

inline Failures prop_dsl_round_trip() {
    Failures bad;
    const Universe u = theorem1_universe();
    std::mt19937_64 rng(0xd51);
    for (int i = 0; i < 1000; ++i) {
        const DecisionTree t = random_tree(rng, u);
        const std::string text = format_tree(t, u);
        if (!(parse_tree(text, u) == t)) bad.push_back("round-trip failed for " + text);
    }
    return bad;
}

struct NamedProperty {
    std::string name;
    Failures (*run)();
};

inline std::vector<NamedProperty> all_properties() {
    return {
        {"template expansion cardinality", prop_template_expansion_cardinality},
        {"image disjointness", prop_image_disjointness},
        {"builtin correctness", prop_builtin_correctness},
        {"compare trichotomy and mirror", prop_compare_trichotomy_mirror},
        {"DP depth monotonicity", prop_dp_monotone_in_depth},
        {"enumeration micro counts", prop_enumeration_micro_counts},
        {"DSL round-trip", prop_dsl_round_trip},
    };
}

}  // namespace recog::test
