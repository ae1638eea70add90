#pragma once

#include <charconv>
#include <optional>
#include <string>
#include <string_view>

namespace herd {

/// Shortest-general formatting with `digits` significant digits ("%.*g"
/// semantics, locale independent).  Non-finite values become "nan", "inf",
/// "-inf".
std::string format_number(double value, int digits = 17);

/// Shortest text that parses back to exactly `value`.
std::string format_exact(double value);

/// Parse a whole token as a double; nullopt on trailing junk or empty input.
std::optional<double> parse_number(std::string_view token);

std::string to_upper(std::string_view s);
std::string_view trim(std::string_view s);

}  // namespace herd
