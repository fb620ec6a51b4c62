#include "recog/tree.hpp"

#include <algorithm>
#include <sstream>

namespace recog {

DecisionTree DecisionTree::leaf(int image_index) {
    DecisionTree t;
    t.nodes_[0].image = image_index;
    return t;
}

DecisionTree DecisionTree::test(int sign_index, const DecisionTree& when_true,
                                const DecisionTree& when_false) {
    DecisionTree t;
    t.nodes_ = when_true.nodes_;
    const int offset = static_cast<int>(t.nodes_.size());
    for (Node n : when_false.nodes_) {
        if (n.when_true >= 0) n.when_true += offset;
        if (n.when_false >= 0) n.when_false += offset;
        t.nodes_.push_back(n);
    }
    t.nodes_.push_back(Node{sign_index, 0, when_true.root_, when_false.root_ + offset});
    t.root_ = static_cast<int>(t.nodes_.size()) - 1;
    return t;
}

namespace {

int depth_from(const DecisionTree& t, int id) {
    const auto& n = t.node(id);
    if (n.is_leaf()) return 0;
    return 1 + std::max(depth_from(t, n.when_true), depth_from(t, n.when_false));
}

bool equal_from(const DecisionTree& a, int ia, const DecisionTree& b, int ib) {
    const auto& na = a.node(ia);
    const auto& nb = b.node(ib);
    if (na.sign != nb.sign) return false;
    if (na.is_leaf()) return na.image == nb.image;
    return equal_from(a, na.when_true, b, nb.when_true) &&
           equal_from(a, na.when_false, b, nb.when_false);
}

}  // namespace

int DecisionTree::depth() const { return depth_from(*this, root_); }

int DecisionTree::internal_count() const {
    int count = 0;
    for (const Node& n : nodes_) {
        if (!n.is_leaf()) ++count;
    }
    return count;
}

bool operator==(const DecisionTree& a, const DecisionTree& b) {
    return equal_from(a, a.root(), b, b.root());
}

Classification classify(const DecisionTree& tree, Pattern x) {
    int id = tree.root();
    int time = 0;
    while (!tree.node(id).is_leaf()) {
        const auto& n = tree.node(id);
        id = pattern_bit(x, n.sign) ? n.when_true : n.when_false;
        ++time;
    }
    return {tree.node(id).image, time};
}

std::optional<Classification> classify_template(const DecisionTree& tree, const Template& t) {
    int id = tree.root();
    int time = 0;
    const std::string& symbols = t.text();
    while (!tree.node(id).is_leaf()) {
        const auto& n = tree.node(id);
        if (n.sign < 1 || n.sign > t.length()) return std::nullopt;
        const char c = symbols[static_cast<std::size_t>(n.sign - 1)];
        if (c == 'B') return std::nullopt;
        id = (c == '1') ? n.when_true : n.when_false;
        ++time;
    }
    return Classification{tree.node(id).image, time};
}

void validate_tree(const DecisionTree& tree, const Universe& u) {
    for (std::size_t i = 0; i < tree.node_count(); ++i) {
        const auto& n = tree.node(static_cast<int>(i));
        if (n.is_leaf()) {
            if (n.image < 0 || n.image >= u.image_count()) {
                throw DomainError("tree: leaf image index " + std::to_string(n.image) +
                                  " out of range 0.." + std::to_string(u.image_count() - 1));
            }
        } else if (n.sign < 1 || n.sign > u.sign_arity()) {
            throw DomainError("tree: sign index " + std::to_string(n.sign) +
                              " out of range 1.." + std::to_string(u.sign_arity()));
        }
    }
}

std::string CorrectnessReport::to_text(const Universe& u) const {
    if (ok) return "correct on all " + std::to_string(u.pattern_count()) + " patterns";
    std::ostringstream out;
    out << misclassified.size() << " misclassified pattern"
        << (misclassified.size() == 1 ? "" : "s") << ":";
    for (const auto& m : misclassified) {
        out << "\n  " << pattern_text(m.pattern, u.sign_arity()) << " expected "
            << u.image(m.expected).name << " got " << u.image(m.got).name;
    }
    return out.str();
}

CorrectnessReport check_correct(const DecisionTree& tree, const Universe& u) {
    validate_tree(tree, u);
    CorrectnessReport report;
    const auto& pats = u.patterns();
    for (std::size_t i = 0; i < pats.size(); ++i) {
        const int got = classify(tree, pats[i]).image;
        const int expected = u.image_of(i);
        if (got != expected) {
            report.ok = false;
            report.misclassified.push_back({pats[i], expected, got});
        }
    }
    return report;
}

int TimeProfile::time_of(const Universe& u, Pattern x) const {
    return by_ordinal[u.ordinal_of(x)];
}

TimeProfile time_profile(const DecisionTree& tree, const Universe& u) {
    CorrectnessReport report = check_correct(tree, u);
    if (!report.ok) {
        throw IncorrectTreeError(std::move(report),
                                 "time profile rejected: tree misclassifies " +
                                     std::to_string(report.misclassified.size()) +
                                     " pattern(s)");
    }
    TimeProfile profile;
    const auto& pats = u.patterns();
    profile.by_ordinal.resize(pats.size());
    profile.by_image.resize(static_cast<std::size_t>(u.image_count()));
    for (std::size_t i = 0; i < pats.size(); ++i) {
        const int t = classify(tree, pats[i]).time;
        profile.by_ordinal[i] = t;
        profile.by_image[static_cast<std::size_t>(u.image_of(i))].push_back(t);
        profile.max_time = std::max(profile.max_time, t);
    }
    for (auto& times : profile.by_image) std::sort(times.begin(), times.end());
    return profile;
}

std::string render_times(const std::vector<int>& sorted_times) {
    if (sorted_times.empty()) return "-";
    const int first = sorted_times.front();
    const int last = sorted_times.back();
    if (first == last) return std::to_string(first);
    std::vector<std::pair<int, std::size_t>> runs;
    for (int t : sorted_times) {
        if (runs.empty() || runs.back().first != t) {
            runs.push_back({t, 1});
        } else {
            ++runs.back().second;
        }
    }
    if (runs.size() == 2 && runs[0].second == runs[1].second) {
        return std::to_string(runs[0].first) + "/" + std::to_string(runs[1].first);
    }
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (i) out << ",";
        out << runs[i].first << ":" << runs[i].second;
    }
    out << "}";
    return out.str();
}

int time_of_set(const DecisionTree& tree, std::span<const Pattern> m) {
    if (m.empty()) throw DomainError("time_of_set: empty pattern set");
    int worst = 0;
    for (Pattern x : m) worst = std::max(worst, classify(tree, x).time);
    return worst;
}

}  // namespace recog
