#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "recog/errors.hpp"

namespace recog {

// Widest sign arity a concrete pattern can carry (one bit per sign).
inline constexpr int kMaxPatternBits = 64;

// Universes with more concrete patterns than this stay symbolic: image
// sizes are tracked exactly but the pattern set is never materialized.
inline constexpr std::uint64_t kMaxExpandedPatterns = 1ull << 22;

// A concrete pattern: a fixed-length bit vector. The text form reads left
// to right as positions 1..L; position k lives at bit k-1 of `bits`.
struct Pattern {
    std::uint64_t bits = 0;

    friend constexpr bool operator==(Pattern a, Pattern b) { return a.bits == b.bits; }
    friend constexpr bool operator!=(Pattern a, Pattern b) { return a.bits != b.bits; }
};

// Position k of the text form, 1-based. Unchecked.
constexpr bool pattern_bit(Pattern x, int k) {
    return (x.bits >> (k - 1)) & 1u;
}

// Lexicographic order of the text forms (position 1 compared first,
// '0' < '1'). Total order; pattern ordinals are assigned along it.
constexpr bool lex_less(Pattern a, Pattern b) {
    const std::uint64_t diff = a.bits ^ b.bits;
    if (diff == 0) return false;
    const std::uint64_t lowest = diff & (0 - diff);
    return (a.bits & lowest) == 0;
}

std::string pattern_text(Pattern x, int length);

// Parses a string of '0'/'1'. Throws FormatError on anything else,
// CapacityError past kMaxPatternBits.
Pattern parse_pattern(std::string_view text);

// Bit k of x, checked against the sign arity. Throws DomainError when k
// is outside 1..sign_arity.
bool eval_sign(int k, Pattern x, int sign_arity);

// A wildcard string over {0,1,B}: 'B' positions range over both bit
// values, so a template denotes a set of 2^(#B) patterns. Input accepts
// '*' as a synonym for 'B'; the canonical text always uses 'B'.
class Template {
public:
    static Template parse(std::string_view text);

    const std::string& text() const { return symbols_; }
    int length() const { return static_cast<int>(symbols_.size()); }
    int wildcard_count() const { return wildcards_; }
    std::uint64_t expansion_size() const { return 1ull << wildcards_; }

    // All concrete instantiations, lex-sorted. Throws CapacityError when
    // the template is too long or too wide to materialize.
    std::vector<Pattern> expand() const;

    // True when x instantiates this template. Requires length <= 64.
    bool contains(Pattern x) const;

    friend bool operator==(const Template& a, const Template& b) {
        return a.symbols_ == b.symbols_;
    }

private:
    explicit Template(std::string symbols, int wildcards)
        : symbols_(std::move(symbols)), wildcards_(wildcards) {}

    std::string symbols_;
    int wildcards_ = 0;
};

// One class of the universe: a named set of patterns given by templates.
struct Image {
    int index = 0;
    std::string name;
    std::vector<Template> templates;
    std::uint64_t size = 0;          // exact count of distinct patterns
    std::vector<Pattern> patterns;   // lex-sorted; empty when symbolic
};

// A finite pattern universe: L binary signs and a partition of the
// pattern set into named images. Immutable after construction; all
// accessors are safe to call concurrently.
//
// Universes small enough to materialize are expanded eagerly; larger ones
// stay symbolic (single template per image required) and refuse the
// per-pattern accessors with CapacityError.
class Universe {
public:
    Universe() = default;

    static Universe from_templates(
        int sign_arity,
        const std::vector<std::pair<std::string, std::vector<Template>>>& image_defs);

    int sign_arity() const { return sign_arity_; }
    int image_count() const { return static_cast<int>(images_.size()); }
    const std::vector<Image>& images() const { return images_; }
    const Image& image(int index) const;
    int image_index(std::string_view name) const;  // -1 when absent
    std::uint64_t pattern_count() const { return pattern_count_; }
    bool expanded() const { return expanded_; }

    // Expanded-only views; throw CapacityError on symbolic universes.
    const std::vector<Pattern>& patterns() const;       // ordinal = position
    int image_of(std::size_t ordinal) const;
    std::size_t ordinal_of(Pattern x) const;            // DomainError when absent
    bool eval_sign(int k, Pattern x) const;

    // Structural equality: same arity, image names in the same order, and
    // the same pattern set per image (template sets when symbolic).
    friend bool operator==(const Universe& a, const Universe& b);

private:
    int sign_arity_ = 0;
    std::vector<Image> images_;
    std::uint64_t pattern_count_ = 0;
    bool expanded_ = false;
    std::vector<Pattern> all_patterns_;  // lex-sorted
    std::vector<int> image_of_;          // parallel to all_patterns_
};

}  // namespace recog
