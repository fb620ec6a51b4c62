#include "recog/pattern.hpp"

#include <algorithm>
#include <sstream>

namespace recog {

namespace {

// Wildcard counts beyond this would make a single template expansion
// exceed kMaxExpandedPatterns on its own.
constexpr int kMaxExpandWildcards = 22;

}  // namespace

std::string pattern_text(Pattern x, int length) {
    std::string out(static_cast<std::size_t>(length), '0');
    for (int k = 1; k <= length; ++k) {
        if (pattern_bit(x, k)) out[static_cast<std::size_t>(k - 1)] = '1';
    }
    return out;
}

Pattern parse_pattern(std::string_view text) {
    if (text.empty()) throw FormatError("pattern: empty string");
    if (text.size() > kMaxPatternBits) {
        throw CapacityError("pattern: length " + std::to_string(text.size()) +
                            " exceeds " + std::to_string(kMaxPatternBits) + " bits");
    }
    Pattern x;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '1') {
            x.bits |= 1ull << i;
        } else if (c != '0') {
            throw FormatError(std::string("pattern: invalid symbol '") + c +
                              "' at position " + std::to_string(i + 1));
        }
    }
    return x;
}

bool eval_sign(int k, Pattern x, int sign_arity) {
    if (k < 1 || k > sign_arity) {
        throw DomainError("sign index " + std::to_string(k) + " out of range 1.." +
                          std::to_string(sign_arity));
    }
    return pattern_bit(x, k);
}

Template Template::parse(std::string_view text) {
    if (text.empty()) throw FormatError("template: empty string");
    std::string canon;
    canon.reserve(text.size());
    int wildcards = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '0' || c == '1') {
            canon.push_back(c);
        } else if (c == 'B' || c == '*') {
            canon.push_back('B');
            ++wildcards;
        } else {
            throw FormatError(std::string("template: invalid symbol '") + c +
                              "' at position " + std::to_string(i + 1) +
                              " (expected 0, 1, B or *)");
        }
    }
    return Template(std::move(canon), wildcards);
}

std::vector<Pattern> Template::expand() const {
    if (length() > kMaxPatternBits) {
        throw CapacityError("template: length " + std::to_string(length()) +
                            " exceeds " + std::to_string(kMaxPatternBits) + " bits");
    }
    if (wildcards_ > kMaxExpandWildcards) {
        throw CapacityError("template: " + std::to_string(wildcards_) +
                            " wildcards would expand to more than " +
                            std::to_string(kMaxExpandedPatterns) + " patterns");
    }
    std::uint64_t base = 0;
    std::vector<int> wild_positions;
    for (int k = 1; k <= length(); ++k) {
        const char c = symbols_[static_cast<std::size_t>(k - 1)];
        if (c == '1') base |= 1ull << (k - 1);
        if (c == 'B') wild_positions.push_back(k - 1);
    }
    std::vector<Pattern> out;
    out.reserve(expansion_size());
    const std::uint64_t combos = expansion_size();
    for (std::uint64_t m = 0; m < combos; ++m) {
        std::uint64_t bits = base;
        for (std::size_t j = 0; j < wild_positions.size(); ++j) {
            if ((m >> j) & 1u) bits |= 1ull << wild_positions[j];
        }
        out.push_back(Pattern{bits});
    }
    std::sort(out.begin(), out.end(),
              [](Pattern a, Pattern b) { return lex_less(a, b); });
    return out;
}

bool Template::contains(Pattern x) const {
    for (int k = 1; k <= length(); ++k) {
        const char c = symbols_[static_cast<std::size_t>(k - 1)];
        if (c == 'B') continue;
        if (pattern_bit(x, k) != (c == '1')) return false;
    }
    return true;
}

namespace {

bool valid_image_name(std::string_view name) {
    if (name.empty()) return false;
    for (char c : name) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.';
        if (!ok) return false;
    }
    return true;
}

// Two templates of equal length share an instantiation unless some
// position holds opposite concrete bits.
bool templates_disjoint(const Template& a, const Template& b) {
    const std::string& sa = a.text();
    const std::string& sb = b.text();
    for (std::size_t i = 0; i < sa.size(); ++i) {
        if (sa[i] != 'B' && sb[i] != 'B' && sa[i] != sb[i]) return true;
    }
    return false;
}

}  // namespace

Universe Universe::from_templates(
    int sign_arity,
    const std::vector<std::pair<std::string, std::vector<Template>>>& image_defs) {
    if (sign_arity < 1) throw DomainError("universe: sign arity must be >= 1");
    if (image_defs.empty()) throw DomainError("universe: no images");

    Universe u;
    u.sign_arity_ = sign_arity;

    std::uint64_t expansion_bound = 0;
    for (const auto& [name, templates] : image_defs) {
        if (!valid_image_name(name)) {
            throw FormatError("universe: invalid image name '" + name + "'");
        }
        if (templates.empty()) {
            throw DomainError("universe: image '" + name + "' has no templates");
        }
        for (const Template& t : templates) {
            if (t.length() != sign_arity) {
                throw DomainError("universe: template '" + t.text() + "' of image '" +
                                  name + "' has length " + std::to_string(t.length()) +
                                  ", expected " + std::to_string(sign_arity));
            }
            if (t.wildcard_count() >= 63) {
                throw CapacityError("universe: image '" + name +
                                    "' is too large to size in 64 bits");
            }
            expansion_bound += t.expansion_size();
        }
        Image img;
        img.index = u.image_count();
        img.name = name;
        img.templates = templates;
        if (u.image_index(name) >= 0) {
            throw DomainError("universe: duplicate image name '" + name + "'");
        }
        u.images_.push_back(std::move(img));
    }

    const bool expandable =
        sign_arity <= kMaxPatternBits && expansion_bound <= kMaxExpandedPatterns;

    if (expandable) {
        // Expand each image, deduplicating within it; overlap across images
        // is an error.
        std::vector<std::pair<Pattern, int>> merged;
        for (Image& img : u.images_) {
            std::vector<Pattern> pats;
            for (const Template& t : img.templates) {
                auto part = t.expand();
                pats.insert(pats.end(), part.begin(), part.end());
            }
            std::sort(pats.begin(), pats.end(),
                      [](Pattern a, Pattern b) { return lex_less(a, b); });
            pats.erase(std::unique(pats.begin(), pats.end()), pats.end());
            img.size = pats.size();
            for (Pattern p : pats) merged.emplace_back(p, img.index);
            img.patterns = std::move(pats);
        }
        std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) {
            return lex_less(a.first, b.first);
        });
        for (std::size_t i = 1; i < merged.size(); ++i) {
            if (merged[i].first == merged[i - 1].first) {
                throw DomainError("universe: images '" +
                                  u.images_[static_cast<std::size_t>(merged[i - 1].second)].name +
                                  "' and '" +
                                  u.images_[static_cast<std::size_t>(merged[i].second)].name +
                                  "' overlap on pattern " +
                                  pattern_text(merged[i].first, sign_arity));
            }
        }
        u.all_patterns_.reserve(merged.size());
        u.image_of_.reserve(merged.size());
        for (const auto& [p, img] : merged) {
            u.all_patterns_.push_back(p);
            u.image_of_.push_back(img);
        }
        u.pattern_count_ = merged.size();
        u.expanded_ = true;
    } else {
        // Symbolic: exact sizes need one template per image (no
        // within-image dedup possible without expanding).
        for (Image& img : u.images_) {
            if (img.templates.size() != 1) {
                throw CapacityError("universe: image '" + img.name +
                                    "' has multiple templates but the universe is too "
                                    "large to expand");
            }
            img.size = img.templates[0].expansion_size();
        }
        for (std::size_t i = 0; i < u.images_.size(); ++i) {
            for (std::size_t j = i + 1; j < u.images_.size(); ++j) {
                if (!templates_disjoint(u.images_[i].templates[0],
                                        u.images_[j].templates[0])) {
                    throw DomainError("universe: images '" + u.images_[i].name +
                                      "' and '" + u.images_[j].name + "' overlap");
                }
            }
        }
        std::uint64_t total = 0;
        for (const Image& img : u.images_) {
            if (total + img.size < total) {
                throw CapacityError("universe: pattern count overflows 64 bits");
            }
            total += img.size;
        }
        u.pattern_count_ = total;
        u.expanded_ = false;
    }
    return u;
}

const Image& Universe::image(int index) const {
    if (index < 0 || index >= image_count()) {
        throw DomainError("universe: image index " + std::to_string(index) +
                          " out of range 0.." + std::to_string(image_count() - 1));
    }
    return images_[static_cast<std::size_t>(index)];
}

int Universe::image_index(std::string_view name) const {
    for (const Image& img : images_) {
        if (img.name == name) return img.index;
    }
    return -1;
}

const std::vector<Pattern>& Universe::patterns() const {
    if (!expanded_) {
        throw CapacityError("universe: " + std::to_string(pattern_count_) +
                            " patterns exceed the expansion limit; per-pattern "
                            "operations are unavailable");
    }
    return all_patterns_;
}

int Universe::image_of(std::size_t ordinal) const {
    patterns();  // capacity check
    if (ordinal >= image_of_.size()) {
        throw DomainError("universe: ordinal " + std::to_string(ordinal) + " out of range");
    }
    return image_of_[ordinal];
}

std::size_t Universe::ordinal_of(Pattern x) const {
    const auto& pats = patterns();
    auto it = std::lower_bound(pats.begin(), pats.end(), x,
                               [](Pattern a, Pattern b) { return lex_less(a, b); });
    if (it == pats.end() || !(*it == x)) {
        throw DomainError("universe: pattern " + pattern_text(x, sign_arity_) +
                          " is not a member");
    }
    return static_cast<std::size_t>(it - pats.begin());
}

bool Universe::eval_sign(int k, Pattern x) const {
    return recog::eval_sign(k, x, sign_arity_);
}

bool operator==(const Universe& a, const Universe& b) {
    if (a.sign_arity_ != b.sign_arity_) return false;
    if (a.images_.size() != b.images_.size()) return false;
    for (std::size_t i = 0; i < a.images_.size(); ++i) {
        const Image& ia = a.images_[i];
        const Image& ib = b.images_[i];
        if (ia.name != ib.name || ia.size != ib.size) return false;
        if (a.expanded_ && b.expanded_) {
            if (ia.patterns != ib.patterns) return false;
        } else {
            auto ta = ia.templates;
            auto tb = ib.templates;
            auto by_text = [](const Template& x, const Template& y) {
                return x.text() < y.text();
            };
            std::sort(ta.begin(), ta.end(), by_text);
            std::sort(tb.begin(), tb.end(), by_text);
            if (!(ta == tb)) return false;
        }
    }
    return true;
}

}  // namespace recog
