#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "recog/pattern.hpp"

namespace recog {

// A recognition algorithm: a binary decision tree whose internal nodes
// test one sign and whose leaves name an image. The true branch is taken
// when the sign holds on the pattern.
//
// Trees are immutable values; composition copies. The default-constructed
// tree is the single leaf naming image 0.
class DecisionTree {
public:
    struct Node {
        int sign = 0;        // 0 marks a leaf
        int image = 0;       // leaf payload
        int when_true = -1;  // child node ids
        int when_false = -1;

        bool is_leaf() const { return sign == 0; }
    };

    DecisionTree() : nodes_{Node{}} {}

    static DecisionTree leaf(int image_index);
    static DecisionTree test(int sign_index, const DecisionTree& when_true,
                             const DecisionTree& when_false);

    int root() const { return root_; }
    const Node& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
    std::size_t node_count() const { return nodes_.size(); }
    bool is_leaf() const { return node(root_).is_leaf(); }
    int depth() const;           // arc count of the longest branch
    int internal_count() const;

    // Structural equality.
    friend bool operator==(const DecisionTree& a, const DecisionTree& b);
    friend bool operator!=(const DecisionTree& a, const DecisionTree& b) { return !(a == b); }

private:
    std::vector<Node> nodes_;
    int root_ = 0;
};

struct LabeledTree {
    std::string label;
    DecisionTree tree;
};

struct Classification {
    int image = 0;
    int time = 0;  // arcs traversed = signs evaluated
};

// Walks x from the root; assumes the tree is valid for x's universe.
Classification classify(const DecisionTree& tree, Pattern x);

// Walks a whole template through the tree. Returns the leaf and depth
// when no wildcard position is ever tested along the way (so every
// instantiation takes the same branch); nullopt otherwise.
std::optional<Classification> classify_template(const DecisionTree& tree, const Template& t);

// Throws DomainError when a sign index or leaf image is out of range for u.
void validate_tree(const DecisionTree& tree, const Universe& u);

struct CorrectnessReport {
    struct Misclassified {
        Pattern pattern;
        int expected = 0;
        int got = 0;
    };
    bool ok = true;
    std::vector<Misclassified> misclassified;

    std::string to_text(const Universe& u) const;
};

// Classifies every pattern of u and reports the mistakes.
CorrectnessReport check_correct(const DecisionTree& tree, const Universe& u);

struct IncorrectTreeError : std::runtime_error {
    CorrectnessReport report;
    IncorrectTreeError(CorrectnessReport r, const std::string& what)
        : std::runtime_error(what), report(std::move(r)) {}
};

// Recognition times of a correct tree over an expanded universe.
struct TimeProfile {
    std::vector<int> by_ordinal;             // parallel to u.patterns()
    std::vector<std::vector<int>> by_image;  // sorted times per image
    int max_time = 0;

    int time_of(const Universe& u, Pattern x) const;
};

// Throws IncorrectTreeError when the tree misclassifies anything.
TimeProfile time_profile(const DecisionTree& tree, const Universe& u);

// Renders a per-image multiset of times: uniform -> "3"; two values of
// equal multiplicity -> "2/3" (faster half first); anything else lists
// value:count pairs.
std::string render_times(const std::vector<int>& sorted_times);

// max over M of the recognition time. DomainError on empty M.
int time_of_set(const DecisionTree& tree, std::span<const Pattern> m);

}  // namespace recog
