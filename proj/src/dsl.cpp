#include "recog/dsl.hpp"

#include <cctype>
#include <sstream>

namespace recog {

namespace {

class Parser {
public:
    Parser(std::string_view text, const Universe& u) : text_(text), u_(u) {}

    DecisionTree run() {
        DecisionTree tree = parse_node();
        skip_space();
        if (pos_ != text_.size()) fail("trailing input");
        return tree;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw FormatError("tree DSL: " + msg + " at offset " + std::to_string(pos_));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    std::string_view take_token() {
        const std::size_t start = pos_;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) break;
            ++pos_;
        }
        if (pos_ == start) fail("expected a token");
        return text_.substr(start, pos_ - start);
    }

    DecisionTree parse_node() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        if (text_[pos_] != '(') {
            const std::size_t at = pos_;
            const std::string_view name = take_token();
            const int image = u_.image_index(name);
            if (image < 0) {
                pos_ = at;
                fail("unknown image name '" + std::string(name) + "'");
            }
            return DecisionTree::leaf(image);
        }
        ++pos_;  // '('
        skip_space();
        const std::size_t at = pos_;
        const std::string_view head = take_token();
        if (head.size() < 2 || head[0] != 'P') {
            pos_ = at;
            fail("expected sign 'P<k>'");
        }
        int sign = 0;
        for (std::size_t i = 1; i < head.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(head[i]))) {
                pos_ = at;
                fail("expected sign 'P<k>'");
            }
            if (sign <= u_.sign_arity()) sign = sign * 10 + (head[i] - '0');
        }
        if (sign < 1 || sign > u_.sign_arity()) {
            pos_ = at;
            fail("sign index '" + std::string(head.substr(1)) + "' out of range 1.." +
                 std::to_string(u_.sign_arity()));
        }
        DecisionTree when_true = parse_node();
        DecisionTree when_false = parse_node();
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
        ++pos_;
        return DecisionTree::test(sign, when_true, when_false);
    }

    std::string_view text_;
    const Universe& u_;
    std::size_t pos_ = 0;
};

void format_node(const DecisionTree& tree, int id, const Universe& u, std::ostream& out) {
    const auto& n = tree.node(id);
    if (n.is_leaf()) {
        out << u.image(n.image).name;
        return;
    }
    out << "(P" << n.sign << ' ';
    format_node(tree, n.when_true, u, out);
    out << ' ';
    format_node(tree, n.when_false, u, out);
    out << ')';
}

}  // namespace

DecisionTree parse_tree(std::string_view text, const Universe& u) {
    return Parser(text, u).run();
}

std::string format_tree(const DecisionTree& tree, const Universe& u) {
    validate_tree(tree, u);
    std::ostringstream out;
    format_node(tree, tree.root(), u, out);
    return out.str();
}

}  // namespace recog
