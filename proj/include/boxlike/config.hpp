#pragma once

#include "boxlike/ifs.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace boxlike {

struct ConfigError : std::runtime_error {
    ConfigError(const std::string& origin, int line, const std::string& what)
        : std::runtime_error(origin + ":" + std::to_string(line) + ": " + what), line_number(line) {}
    int line_number;
};

/// Parses an IFS description in TOML syntax. Each map is one `[[map]]` table
/// with either
///   iso = "rot270"            (optional, defaults to "id")
///   rect = ["3/5", "1", "3/4", "1"]   -- x0, x1, y0, y1
/// or the raw form
///   a = "2/5"  b = "1/4"  iso = "rot270"  t = ["3/5", "3/4"]
/// Rationals may be written as strings ("3/5", "0.75") or bare numbers.
/// The returned IFS is validated; violations raise ConfigError.
BoxLikeIFS parse_ifs_config(std::string_view text, std::string_view origin = "<config>");

BoxLikeIFS load_ifs_config(const std::string& path);

/// Canonical TOML for an IFS: one [[map]] per map in raw (a, b, iso, t) form.
/// Parsing the output reproduces the input exactly.
std::string canonical_config(const BoxLikeIFS& ifs);

}  // namespace boxlike
