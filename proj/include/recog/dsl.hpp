#pragma once

#include <string>
#include <string_view>

#include "recog/tree.hpp"

namespace recog {

// Tree DSL: a leaf is an image name; an internal node is
// `(P<k> <true-subtree> <false-subtree>)`. Whitespace between tokens is
// free-form on input; the canonical form uses single spaces.
DecisionTree parse_tree(std::string_view text, const Universe& u);
std::string format_tree(const DecisionTree& tree, const Universe& u);

}  // namespace recog
