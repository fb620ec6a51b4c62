#pragma once

#include <string>
#include <string_view>

#include "recog/pattern.hpp"

namespace recog {

// Universe file format, line oriented:
//   L=<integer>
//   <image_name>: <template>     (repeated names accumulate templates)
// '#' starts a comment line; blank lines are ignored.
Universe parse_universe(std::string_view text);
Universe load_universe(const std::string& path);

// Canonical emission; parse_universe(emit_universe(u)) == u.
std::string emit_universe(const Universe& u);

// FNV-1a 64 of the canonical emission, as 16 hex digits.
std::string universe_hash(const Universe& u);

}  // namespace recog
