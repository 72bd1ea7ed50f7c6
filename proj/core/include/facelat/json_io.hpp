#pragma once

#include <string>
#include <string_view>

#include "facelat/arrangement.hpp"

namespace facelat {

/// {"dim": n, "hyperplanes": [["p/q", ...], ...], "base_point": ["p/q", ...]}
/// Rationals are strings ("p" or "p/q"); plain JSON integers are accepted on
/// input too. Throws ParseError on malformed text and the usual
/// build_arrangement errors on invalid geometry.
Arrangement parse_arrangement_json(std::string_view text);

/// Inverse of parse_arrangement_json; parsing the output gives back an equal
/// arrangement.
std::string arrangement_to_json(const Arrangement& arr);

/// Reads a file ("-" is stdin). Throws ParseError if it cannot be read.
Arrangement load_arrangement(const std::string& path);

}  // namespace facelat
