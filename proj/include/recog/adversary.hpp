#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "recog/bigint.hpp"
#include "recog/tree.hpp"

namespace recog {

// Pattern-ordinal bitmasks of an expanded universe with at most 64
// patterns: one bit per ordinal, plus per-sign and per-image masks.
struct SignMasks {
    int sign_arity = 0;
    std::uint64_t all = 0;
    std::vector<std::uint64_t> sign_true;   // [0] unused; [k] = patterns with sign k true
    std::vector<std::uint64_t> image_mask;  // per image
    std::vector<int> image_of;              // per ordinal

    bool pure(std::uint64_t subset) const;  // subset nonempty and within one image
    int image_of_subset(std::uint64_t subset) const;  // image of the lowest ordinal
};

// Throws CapacityError when the universe has more than 64 patterns.
SignMasks build_sign_masks(const Universe& u);

// Every internal node splits its reaching pattern set into two nonempty
// parts.
bool is_reduced(const DecisionTree& tree, const Universe& u);

// Membership in the enumerated class: reduced, leaves exactly where the
// reaching set is pure, and every leaf names its set's image. Such trees
// are correct by construction; any correct tree outside the class is
// dominated by one inside it (pruning a split of a pure set never slows
// any pattern down).
bool in_enumeration_class(const DecisionTree& tree, const Universe& u);

struct MarginResult {
    int margin = 0;          // max over X of V(X, target) - V(target, X)
    DecisionTree witness;    // a tree attaining the margin
    std::size_t states_explored = 0;
};

// Exact optimal-margin adversary against `target` over all correct
// reduced trees, by memoized dynamic programming over (pattern subset,
// depth) states:
//
//   f(S,d) = sum over x in S of step(T(target,x) - d)   when S is pure
//            (step = +1 / 0 / -1 for positive / zero / negative),
//   f(S,d) = -|S|                                       when d > max T(target),
//   f(S,d) = max over signs p splitting S nontrivially of
//            f(S and p, d+1) + f(S minus p, d+1)        otherwise.
//
// The witness follows the argmax choices, lowest sign index first.
class MarginSolver {
public:
    // Throws IncorrectTreeError when target misclassifies, CapacityError
    // past 64 patterns.
    MarginSolver(const DecisionTree& target, const Universe& u);

    int value(std::uint64_t subset, int depth);
    MarginResult solve();

    std::size_t states() const { return memo_.size(); }
    int max_target_time() const { return max_time_; }
    std::uint64_t full_mask() const { return masks_.all; }
    const SignMasks& masks() const { return masks_; }

    // Memoized non-pure states below the depth cap, for inspection.
    std::vector<std::pair<std::uint64_t, int>> memoized_states() const;

private:
    struct Key {
        std::uint64_t subset;
        int depth;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            std::uint64_t h = k.subset * 0x9e3779b97f4a7c15ull;
            h ^= static_cast<std::uint64_t>(k.depth) + (h >> 29);
            return static_cast<std::size_t>(h * 0xbf58476d1ce4e5b9ull);
        }
    };
    struct Entry {
        int value;
        int choice;  // splitting sign, 0 for leaf
    };

    int leaf_value(std::uint64_t subset, int depth) const;
    DecisionTree rebuild(std::uint64_t subset, int depth) const;

    SignMasks masks_;
    std::vector<int> target_times_;          // per ordinal
    int max_time_ = 0;
    std::vector<std::uint64_t> faster_mask_;  // [d] = ordinals with target time > d
    std::vector<std::uint64_t> slower_mask_;  // [d] = ordinals with target time < d
    std::unordered_map<Key, Entry, KeyHash> memo_;
};

MarginResult max_margin_vs(const DecisionTree& target, const Universe& u);

struct DominatorReport {
    struct PerTarget {
        std::string label;
        int margin = 0;
        DecisionTree witness;
        std::size_t states_explored = 0;
    };
    bool ok = false;  // true when every margin is <= 0
    std::vector<PerTarget> targets;
};

DominatorReport verify_no_dominator(std::span<const LabeledTree> targets, const Universe& u);

// Exact count of the enumerated class, by the memoized recurrence
// c(S) = 1 when S is pure, else sum over splitting signs p of
// c(S and p) * c(S minus p).
BigInt count_reduced_trees(const Universe& u);

// Streams the class in deterministic order: ascending sign index at every
// choice point, true branch explored first. Stops after `limit` trees or
// when the sink returns false; returns the number emitted.
std::uint64_t enumerate_reduced_trees(const Universe& u, std::uint64_t limit,
                                      const std::function<bool(const DecisionTree&)>& sink);

std::vector<DecisionTree> first_reduced_trees(const Universe& u, std::uint64_t limit);

}  // namespace recog
