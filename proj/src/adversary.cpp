#include "recog/adversary.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace recog {

bool SignMasks::pure(std::uint64_t subset) const {
    if (subset == 0) return false;
    const int img = image_of_subset(subset);
    return (subset & ~image_mask[static_cast<std::size_t>(img)]) == 0;
}

int SignMasks::image_of_subset(std::uint64_t subset) const {
    return image_of[static_cast<std::size_t>(std::countr_zero(subset))];
}

SignMasks build_sign_masks(const Universe& u) {
    const auto& pats = u.patterns();
    if (pats.size() > 64) {
        throw CapacityError("adversary: universe has " + std::to_string(pats.size()) +
                            " patterns; subset search requires at most 64");
    }
    SignMasks m;
    m.sign_arity = u.sign_arity();
    m.all = pats.size() == 64 ? ~0ull : (1ull << pats.size()) - 1;
    m.sign_true.assign(static_cast<std::size_t>(u.sign_arity()) + 1, 0);
    m.image_mask.assign(static_cast<std::size_t>(u.image_count()), 0);
    m.image_of.resize(pats.size());
    for (std::size_t i = 0; i < pats.size(); ++i) {
        const std::uint64_t bit = 1ull << i;
        for (int k = 1; k <= u.sign_arity(); ++k) {
            if (pattern_bit(pats[i], k)) m.sign_true[static_cast<std::size_t>(k)] |= bit;
        }
        m.image_of[i] = u.image_of(i);
        m.image_mask[static_cast<std::size_t>(m.image_of[i])] |= bit;
    }
    return m;
}

namespace {

// Walks the reaching sets of every node. `accept` sees (node, reaching
// mask) and may veto.
bool walk_reaching_sets(const DecisionTree& tree, const SignMasks& m,
                        const std::function<bool(const DecisionTree::Node&, std::uint64_t)>& accept) {
    struct Frame {
        int id;
        std::uint64_t reach;
    };
    std::vector<Frame> stack{{tree.root(), m.all}};
    while (!stack.empty()) {
        const Frame f = stack.back();
        stack.pop_back();
        const auto& n = tree.node(f.id);
        if (!accept(n, f.reach)) return false;
        if (!n.is_leaf()) {
            const std::uint64_t t = f.reach & m.sign_true[static_cast<std::size_t>(n.sign)];
            stack.push_back({n.when_true, t});
            stack.push_back({n.when_false, f.reach & ~t});
        }
    }
    return true;
}

}  // namespace

bool is_reduced(const DecisionTree& tree, const Universe& u) {
    validate_tree(tree, u);
    const SignMasks m = build_sign_masks(u);
    return walk_reaching_sets(tree, m, [&](const DecisionTree::Node& n, std::uint64_t reach) {
        if (n.is_leaf()) return true;
        const std::uint64_t t = reach & m.sign_true[static_cast<std::size_t>(n.sign)];
        return t != 0 && t != reach;
    });
}

bool in_enumeration_class(const DecisionTree& tree, const Universe& u) {
    validate_tree(tree, u);
    const SignMasks m = build_sign_masks(u);
    return walk_reaching_sets(tree, m, [&](const DecisionTree::Node& n, std::uint64_t reach) {
        if (reach == 0) return false;
        if (n.is_leaf()) {
            return m.pure(reach) && m.image_of_subset(reach) == n.image;
        }
        if (m.pure(reach)) return false;
        const std::uint64_t t = reach & m.sign_true[static_cast<std::size_t>(n.sign)];
        return t != 0 && t != reach;
    });
}

MarginSolver::MarginSolver(const DecisionTree& target, const Universe& u)
    : masks_(build_sign_masks(u)) {
    const TimeProfile profile = time_profile(target, u);  // rejects incorrect targets
    target_times_ = profile.by_ordinal;
    max_time_ = profile.max_time;
    faster_mask_.assign(static_cast<std::size_t>(max_time_) + 2, 0);
    slower_mask_.assign(static_cast<std::size_t>(max_time_) + 2, 0);
    for (int d = 0; d <= max_time_ + 1; ++d) {
        for (std::size_t i = 0; i < target_times_.size(); ++i) {
            if (target_times_[i] > d) faster_mask_[static_cast<std::size_t>(d)] |= 1ull << i;
            if (target_times_[i] < d) slower_mask_[static_cast<std::size_t>(d)] |= 1ull << i;
        }
    }
}

int MarginSolver::leaf_value(std::uint64_t subset, int depth) const {
    const int d = std::min(depth, max_time_ + 1);
    return std::popcount(subset & faster_mask_[static_cast<std::size_t>(d)]) -
           std::popcount(subset & slower_mask_[static_cast<std::size_t>(d)]);
}

int MarginSolver::value(std::uint64_t subset, int depth) {
    if (masks_.pure(subset)) return leaf_value(subset, depth);
    if (depth > max_time_) return -std::popcount(subset);
    const Key key{subset, depth};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second.value;

    int best = std::numeric_limits<int>::min();
    int choice = 0;
    for (int k = 1; k <= masks_.sign_arity; ++k) {
        const std::uint64_t t = subset & masks_.sign_true[static_cast<std::size_t>(k)];
        if (t == 0 || t == subset) continue;
        const int v = value(t, depth + 1) + value(subset & ~t, depth + 1);
        if (v > best) {
            best = v;
            choice = k;
        }
    }
    memo_.emplace(key, Entry{best, choice});
    return best;
}

DecisionTree MarginSolver::rebuild(std::uint64_t subset, int depth) const {
    if (masks_.pure(subset)) return DecisionTree::leaf(masks_.image_of_subset(subset));
    int sign = 0;
    if (depth > max_time_) {
        // Past the depth cap every completion scores the same; take the
        // lowest splitting sign.
        for (int k = 1; k <= masks_.sign_arity; ++k) {
            const std::uint64_t t = subset & masks_.sign_true[static_cast<std::size_t>(k)];
            if (t != 0 && t != subset) {
                sign = k;
                break;
            }
        }
    } else {
        sign = memo_.at(Key{subset, depth}).choice;
    }
    const std::uint64_t t = subset & masks_.sign_true[static_cast<std::size_t>(sign)];
    return DecisionTree::test(sign, rebuild(t, depth + 1), rebuild(subset & ~t, depth + 1));
}

MarginResult MarginSolver::solve() {
    MarginResult result;
    result.margin = value(masks_.all, 0);
    result.witness = rebuild(masks_.all, 0);
    result.states_explored = memo_.size();
    return result;
}

std::vector<std::pair<std::uint64_t, int>> MarginSolver::memoized_states() const {
    std::vector<std::pair<std::uint64_t, int>> out;
    out.reserve(memo_.size());
    for (const auto& [key, entry] : memo_) out.emplace_back(key.subset, key.depth);
    return out;
}

MarginResult max_margin_vs(const DecisionTree& target, const Universe& u) {
    return MarginSolver(target, u).solve();
}

DominatorReport verify_no_dominator(std::span<const LabeledTree> targets, const Universe& u) {
    DominatorReport report;
    report.ok = true;
    for (const LabeledTree& t : targets) {
        MarginResult r = max_margin_vs(t.tree, u);
        report.ok = report.ok && r.margin <= 0;
        report.targets.push_back(
            {t.label, r.margin, std::move(r.witness), r.states_explored});
    }
    return report;
}

namespace {

class TreeCounter {
public:
    explicit TreeCounter(const SignMasks& m) : m_(m) {}

    const BigInt& count(std::uint64_t subset) {
        if (auto it = memo_.find(subset); it != memo_.end()) return it->second;
        BigInt total = 0;
        if (m_.pure(subset)) {
            total = 1;
        } else {
            for (int k = 1; k <= m_.sign_arity; ++k) {
                const std::uint64_t t = subset & m_.sign_true[static_cast<std::size_t>(k)];
                if (t == 0 || t == subset) continue;
                total += count(t) * count(subset & ~t);
            }
        }
        return memo_.emplace(subset, std::move(total)).first->second;
    }

private:
    const SignMasks& m_;
    std::unordered_map<std::uint64_t, BigInt> memo_;
};

class TreeStreamer {
public:
    TreeStreamer(const SignMasks& m, std::uint64_t limit,
                 const std::function<bool(const DecisionTree&)>& sink)
        : m_(m), remaining_(limit), sink_(sink) {}

    std::uint64_t run() {
        if (remaining_ > 0) {
            stream(m_.all, [this](const DecisionTree& t) { return deliver(t); });
        }
        return emitted_;
    }

private:
    bool deliver(const DecisionTree& t) {
        ++emitted_;
        --remaining_;
        const bool keep_going = sink_(t);
        return keep_going && remaining_ > 0;
    }

    // Calls `accept` with every tree over `subset`; stops early when
    // accept returns false. Returns false when stopped.
    bool stream(std::uint64_t subset, const std::function<bool(const DecisionTree&)>& accept) {
        if (m_.pure(subset)) {
            return accept(DecisionTree::leaf(m_.image_of_subset(subset)));
        }
        for (int k = 1; k <= m_.sign_arity; ++k) {
            const std::uint64_t t = subset & m_.sign_true[static_cast<std::size_t>(k)];
            if (t == 0 || t == subset) continue;
            const bool keep_going = stream(t, [&](const DecisionTree& when_true) {
                return stream(subset & ~t, [&](const DecisionTree& when_false) {
                    return accept(DecisionTree::test(k, when_true, when_false));
                });
            });
            if (!keep_going) return false;
        }
        return true;
    }

    const SignMasks& m_;
    std::uint64_t remaining_;
    std::uint64_t emitted_ = 0;
    const std::function<bool(const DecisionTree&)>& sink_;
};

}  // namespace

BigInt count_reduced_trees(const Universe& u) {
    const SignMasks m = build_sign_masks(u);
    return TreeCounter(m).count(m.all);
}

std::uint64_t enumerate_reduced_trees(const Universe& u, std::uint64_t limit,
                                      const std::function<bool(const DecisionTree&)>& sink) {
    const SignMasks m = build_sign_masks(u);
    return TreeStreamer(m, limit, sink).run();
}

std::vector<DecisionTree> first_reduced_trees(const Universe& u, std::uint64_t limit) {
    std::vector<DecisionTree> out;
    enumerate_reduced_trees(u, limit, [&](const DecisionTree& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

}  // namespace recog
