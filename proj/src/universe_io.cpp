#include "recog/universe_io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <vector>

namespace recog {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace

Universe parse_universe(std::string_view text) {
    std::vector<std::pair<std::string, std::vector<Template>>> image_defs;
    int sign_arity = -1;
    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;

        if (sign_arity < 0) {
            if (line.substr(0, 2) != "L=") {
                throw FormatError("universe file: line " + std::to_string(line_no) +
                                  ": expected 'L=<integer>' first");
            }
            const std::string digits(trim(line.substr(2)));
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(digits, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != digits.size() || value < 1) {
                throw FormatError("universe file: line " + std::to_string(line_no) +
                                  ": invalid sign arity '" + digits + "'");
            }
            sign_arity = value;
            continue;
        }

        const std::size_t colon = line.find(':');
        if (colon == std::string_view::npos) {
            throw FormatError("universe file: line " + std::to_string(line_no) +
                              ": expected '<image_name>: <template>'");
        }
        const std::string name(trim(line.substr(0, colon)));
        const std::string_view body = trim(line.substr(colon + 1));
        Template tmpl = [&] {
            try {
                return Template::parse(body);
            } catch (const FormatError& e) {
                throw FormatError("universe file: line " + std::to_string(line_no) + ": " +
                                  e.what());
            }
        }();
        auto it = std::find_if(image_defs.begin(), image_defs.end(),
                               [&](const auto& d) { return d.first == name; });
        if (it == image_defs.end()) {
            image_defs.push_back({name, {std::move(tmpl)}});
        } else {
            it->second.push_back(std::move(tmpl));
        }
    }
    if (sign_arity < 0) throw FormatError("universe file: missing 'L=<integer>' line");
    if (image_defs.empty()) throw FormatError("universe file: no images defined");
    return Universe::from_templates(sign_arity, image_defs);
}

Universe load_universe(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("universe file: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_universe(buf.str());
    } catch (const FormatError& e) {
        throw FormatError(path + ": " + e.what());
    } catch (const DomainError& e) {
        throw DomainError(path + ": " + e.what());
    }
}

std::string emit_universe(const Universe& u) {
    std::ostringstream out;
    out << "L=" << u.sign_arity() << "\n";
    for (const Image& img : u.images()) {
        for (const Template& t : img.templates) {
            out << img.name << ": " << t.text() << "\n";
        }
    }
    return out.str();
}

std::string universe_hash(const Universe& u) {
    const std::string text = emit_universe(u);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace recog
