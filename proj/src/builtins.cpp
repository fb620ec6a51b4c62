#include "recog/builtins.hpp"

#include <string>

namespace recog {

Universe theorem1_universe() {
    return Universe::from_templates(
        9, {{"a0", {Template::parse("1BB01B001")}},
            {"a1", {Template::parse("01B0011BB")}},
            {"a2", {Template::parse("0011BB01B")}},
            {"a3", {Template::parse("000000000")}}});
}

Universe theorem2_universe(int n) {
    if (n < 3) throw DomainError("theorem2 universe: n must be >= 3, got " + std::to_string(n));
    if (n * (n - 1) / 2 > 62) {
        throw CapacityError("theorem2 universe: n=" + std::to_string(n) +
                            " puts image sizes beyond 64-bit counts (n(n-1)/2 > 62)");
    }
    // Block i (1-based): i-1 zeros, a one, n-i wildcards.
    std::vector<std::string> blocks(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        std::string b(static_cast<std::size_t>(n), 'B');
        for (int j = 0; j < i - 1; ++j) b[static_cast<std::size_t>(j)] = '0';
        b[static_cast<std::size_t>(i - 1)] = '1';
        blocks[static_cast<std::size_t>(i - 1)] = std::move(b);
    }
    std::vector<std::pair<std::string, std::vector<Template>>> images;
    for (int j = 0; j < n; ++j) {
        std::string tmpl;
        tmpl.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            tmpl += blocks[static_cast<std::size_t>((j + i) % n)];
        }
        images.push_back({"a" + std::to_string(j), {Template::parse(tmpl)}});
    }
    images.push_back(
        {"a" + std::to_string(n),
         {Template::parse(std::string(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), '0'))}});
    return Universe::from_templates(n * n, images);
}

int theorem2_parameter(const Universe& u) {
    const int n = u.image_count() - 1;
    if (n < 3 || u.sign_arity() != n * n) {
        throw DomainError("universe is not shaped like a theorem2 family (images=" +
                          std::to_string(u.image_count()) + ", L=" +
                          std::to_string(u.sign_arity()) + ")");
    }
    return n;
}

int sign_from_block(int n, int block, int position) {
    if (n < 1) throw DomainError("sign_from_block: n must be >= 1");
    if (block < 0 || block > n - 1) {
        throw DomainError("sign_from_block: block " + std::to_string(block) +
                          " out of range 0.." + std::to_string(n - 1));
    }
    if (position < 1 || position > n) {
        throw DomainError("sign_from_block: position " + std::to_string(position) +
                          " out of range 1.." + std::to_string(n));
    }
    return n * block + position;
}

DecisionTree algorithm_a() { return spine_algorithm(3, 0); }
DecisionTree algorithm_b() { return spine_algorithm(3, 1); }
DecisionTree algorithm_c() { return spine_algorithm(3, 2); }

std::vector<LabeledTree> theorem1_algorithms() {
    return {{"A", algorithm_a()}, {"B", algorithm_b()}, {"C", algorithm_c()}};
}

DecisionTree spine_algorithm(int n, int q) {
    if (n < 3) throw DomainError("spine algorithm: n must be >= 3");
    if (q < 0 || q > n - 1) {
        throw DomainError("spine algorithm: q=" + std::to_string(q) +
                          " out of range 0.." + std::to_string(n - 1));
    }
    DecisionTree tree = DecisionTree::leaf(n);
    for (int m = n; m >= 1; --m) {
        const int image = (n - q + m - 1) % n;
        tree = DecisionTree::test(sign_from_block(n, q, m), DecisionTree::leaf(image), tree);
    }
    return tree;
}

DecisionTree spine_algorithm(const Universe& u, int q) {
    return spine_algorithm(theorem2_parameter(u), q);
}

std::vector<LabeledTree> spine_algorithms(int n) {
    std::vector<LabeledTree> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
        out.push_back({"A" + std::to_string(q), spine_algorithm(n, q)});
    }
    return out;
}

}  // namespace recog
