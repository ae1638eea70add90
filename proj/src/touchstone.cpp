#include "herd/touchstone.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <vector>

#include "herd/constants.hpp"
#include "herd/errors.hpp"
#include "herd/format.hpp"

namespace herd {

namespace {

struct OptionLine {
  FrequencyUnit unit = FrequencyUnit::ghz;
  TouchstoneFormat format = TouchstoneFormat::ma;
  double z_ref = 50.0;
};

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

// Touchstone v1 defaults apply to fields the option line leaves out.
OptionLine parse_option_line(std::string_view body, std::size_t line_no) {
  OptionLine opt;
  const auto tokens = split_ws(body);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string tok = to_upper(tokens[i]);
    if (tok == "HZ") opt.unit = FrequencyUnit::hz;
    else if (tok == "KHZ") opt.unit = FrequencyUnit::khz;
    else if (tok == "MHZ") opt.unit = FrequencyUnit::mhz;
    else if (tok == "GHZ") opt.unit = FrequencyUnit::ghz;
    else if (tok == "RI") opt.format = TouchstoneFormat::ri;
    else if (tok == "MA") opt.format = TouchstoneFormat::ma;
    else if (tok == "DB") opt.format = TouchstoneFormat::db;
    else if (tok == "S") continue;
    else if (tok == "Y" || tok == "Z" || tok == "H" || tok == "G")
      throw ParseError(line_no, "unsupported parameter type '" + tok + "' (only S is supported)");
    else if (tok == "R") {
      if (i + 1 >= tokens.size()) throw ParseError(line_no, "option line: R needs a reference impedance");
      const auto z = parse_number(tokens[++i]);
      if (!z || !std::isfinite(*z) || *z <= 0.0)
        throw ParseError(line_no, "option line: invalid reference impedance '" + std::string(tokens[i]) + "'");
      opt.z_ref = *z;
    } else {
      throw ParseError(line_no, "option line: unknown token '" + std::string(tokens[i]) + "'");
    }
  }
  return opt;
}

Complex decode_pair(double first, double second, TouchstoneFormat fmt) {
  constexpr double deg = constants::pi / 180.0;
  switch (fmt) {
    case TouchstoneFormat::ri:
      return {first, second};
    case TouchstoneFormat::ma:
      return std::polar(first, second * deg);
    case TouchstoneFormat::db:
      return std::polar(std::pow(10.0, first / 20.0), second * deg);
  }
  return {};
}

std::array<double, 2> encode_pair(Complex v, TouchstoneFormat fmt) {
  constexpr double deg = 180.0 / constants::pi;
  // +0.0 folds negative zero so a null entry prints as "0"
  v = {v.real() + 0.0, v.imag() + 0.0};
  switch (fmt) {
    case TouchstoneFormat::ri:
      return {v.real(), v.imag()};
    case TouchstoneFormat::ma:
      return {std::abs(v), std::arg(v) * deg};
    case TouchstoneFormat::db: {
      const double mag = std::abs(v);
      const double db = mag > 0.0 ? std::max(20.0 * std::log10(mag), touchstone_db_floor) : touchstone_db_floor;
      return {db, std::arg(v) * deg};
    }
  }
  return {};
}

}  // namespace

double unit_scale(FrequencyUnit unit) {
  switch (unit) {
    case FrequencyUnit::hz: return 1.0;
    case FrequencyUnit::khz: return 1e3;
    case FrequencyUnit::mhz: return 1e6;
    case FrequencyUnit::ghz: return 1e9;
  }
  return 1.0;
}

std::string to_string(TouchstoneFormat fmt) {
  switch (fmt) {
    case TouchstoneFormat::ri: return "RI";
    case TouchstoneFormat::ma: return "MA";
    case TouchstoneFormat::db: return "DB";
  }
  return "?";
}

std::string to_string(FrequencyUnit unit) {
  switch (unit) {
    case FrequencyUnit::hz: return "HZ";
    case FrequencyUnit::khz: return "KHZ";
    case FrequencyUnit::mhz: return "MHZ";
    case FrequencyUnit::ghz: return "GHZ";
  }
  return "?";
}

SParamTable parse_touchstone(std::istream& in) {
  std::optional<OptionLine> option;
  bool magnitude_only = false;
  std::string label;
  std::vector<double> freqs;
  std::vector<TwoPort> entries;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto bang = line.find('!'); bang != std::string_view::npos) {
      const auto comment = trim(line.substr(bang + 1));
      if (to_upper(comment) == "MAGONLY") magnitude_only = true;
      else if (label.empty() && !comment.empty() && trim(line.substr(0, bang)).empty()) {
        label = comment.starts_with("herd ") ? trim(comment.substr(5)) : comment;
      }
      line = line.substr(0, bang);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[')
      throw ParseError(line_no, "Touchstone v2 keyword '" + std::string(line) + "' is not supported (v1 only)");
    if (line.front() == '#') {
      if (option) throw ParseError(line_no, "more than one option line");
      if (!entries.empty()) throw ParseError(line_no, "option line must precede the data");
      option = parse_option_line(line.substr(1), line_no);
      continue;
    }
    if (!option) throw ParseError(line_no, "data row before the option line");

    const auto fields = split_ws(line);
    if (fields.size() != 9)
      throw ParseError(line_no, "expected 9 fields in a two-port data row, found " + std::to_string(fields.size()));
    std::array<double, 9> v{};
    for (std::size_t k = 0; k < 9; ++k) {
      const auto parsed = parse_number(fields[k]);
      if (!parsed || !std::isfinite(*parsed))
        throw ParseError(line_no, "invalid number '" + std::string(fields[k]) + "'");
      v[k] = *parsed;
    }

    const double f = v[0] * unit_scale(option->unit);
    if (!(f > 0.0)) throw ParseError(line_no, "frequency must be positive");
    if (!freqs.empty() && !(f > freqs.back())) throw ParseError(line_no, "frequencies must be strictly increasing");

    // 2-port rows are ordered S11 S21 S12 S22.
    TwoPort port;
    port.z_ref = option->z_ref;
    port.s11 = decode_pair(v[1], v[2], option->format);
    port.s21 = decode_pair(v[3], v[4], option->format);
    port.s12 = decode_pair(v[5], v[6], option->format);
    port.s22 = decode_pair(v[7], v[8], option->format);
    freqs.push_back(f);
    entries.push_back(port);
  }

  if (!option) throw ParseError(line_no, "missing option line");
  if (entries.empty()) throw ParseError(line_no, "no data rows");

  if (magnitude_only) {
    for (auto& p : entries) {
      p.s11 = std::abs(p.s11);
      p.s21 = std::abs(p.s21);
      p.s12 = std::abs(p.s12);
      p.s22 = std::abs(p.s22);
    }
  }

  SParamTable table(FrequencyGrid(std::move(freqs)), std::move(entries), Provenance::measured,
                    label.empty() ? "measured" : label);
  table.magnitude_only = magnitude_only;
  return table;
}

SParamTable parse_touchstone(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_touchstone(in);
}

SParamTable read_touchstone_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open Touchstone file '" + path + "'");
  return parse_touchstone(in);
}

std::string write_touchstone(const SParamTable& table, TouchstoneFormat fmt, FrequencyUnit unit) {
  if (table.entries.empty()) throw DomainError("cannot write an empty S-parameter table");
  const double scale = unit_scale(unit);

  std::string out;
  out += "! herd " + (table.label.empty() ? std::string("table") : table.label) + "\n";
  if (table.magnitude_only) out += "!MAGONLY\n";
  out += "# " + to_string(unit) + " S " + to_string(fmt) + " R " + format_number(table.entries.front().z_ref) + "\n";

  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& p = table.entries[i];
    out += format_number(table.grid[i] / scale);
    for (const Complex& s : {p.s11, p.s21, p.s12, p.s22}) {
      const auto pair = encode_pair(s, fmt);
      out += ' ';
      out += format_number(pair[0]);
      out += ' ';
      out += format_number(pair[1]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace herd
