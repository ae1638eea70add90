#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "herd/cascade.hpp"

namespace herd {

enum class TouchstoneFormat { ri, ma, db };
enum class FrequencyUnit { hz, khz, mhz, ghz };

/// Hz per unit, exact powers of ten.
double unit_scale(FrequencyUnit unit);
std::string to_string(TouchstoneFormat fmt);
std::string to_string(FrequencyUnit unit);

/// Magnitudes below this are written as this level in DB format.
inline constexpr double touchstone_db_floor = -400.0;

/// Parse Touchstone v1 two-port data.  Accepts `!` comments (including the
/// `!MAGONLY` directive, which zeroes all phases and flags the table), exactly
/// one `#` option line and rows of 9 numeric fields.  Throws ParseError with the
/// offending line number.
SParamTable parse_touchstone(std::istream& in);
SParamTable parse_touchstone(std::string_view text);
SParamTable read_touchstone_file(const std::string& path);

/// Touchstone v1 text, 17 significant digits per number.
std::string write_touchstone(const SParamTable& table, TouchstoneFormat fmt = TouchstoneFormat::db,
                             FrequencyUnit unit = FrequencyUnit::ghz);

}  // namespace herd
