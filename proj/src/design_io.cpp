#include "herd/design_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "herd/errors.hpp"
#include "herd/format.hpp"

namespace herd {

namespace {

struct Entry {
  std::string value;
  std::size_t line = 0;
};

struct KeySpec {
  const char* name;
  std::optional<std::string> fallback;
};

const std::vector<KeySpec> design_keys = {
    {"a_m", std::nullopt},
    {"b_m", std::nullopt},
    {"d_m", std::nullopt},
    {"r_inner_m", std::nullopt},
    {"r_outer_m", std::nullopt},
    {"coax_eps_r", "1"},
    {"aperture_eps_r", "1"},
    {"apertures_per_section", std::to_string(FilterDesign::default_apertures_per_section)},
    {"sections", std::nullopt},
    {"section_pitch_m", format_exact(FilterDesign::default_section_pitch)},
    {"stopband_kappa", format_exact(FilterDesign::default_stopband_kappa)},
    {"dominant_mode_axis", "WIDTH"},
};

const std::vector<KeySpec> spec_keys = {
    {"z0_ohm", "50"},
    {"f_passband_top_hz", std::nullopt},
    {"passband_il_budget_db", std::nullopt},
    {"f_stopband_start_hz", std::nullopt},
    {"stopband_min_attenuation_db", std::nullopt},
    {"aperture_eps_r", "1"},
    {"coax_eps_r", "1"},
    {"apertures_per_section", std::to_string(FilterDesign::default_apertures_per_section)},
};

class KeyValues {
 public:
  KeyValues(std::string_view text, const std::vector<KeySpec>& keys) {
    std::map<std::string, Entry> raw;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      std::string_view body = line;
      if (const auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
      body = trim(body);
      if (body.empty()) continue;
      const auto eq = body.find('=');
      if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
      const std::string key(trim(body.substr(0, eq)));
      const std::string value(trim(body.substr(eq + 1)));
      if (key.empty()) throw ParseError(line_no, "empty key");
      if (value.empty()) throw ParseError(line_no, "empty value for key '" + key + "'");
      bool known = false;
      for (const auto& k : keys) known = known || key == k.name;
      if (!known) throw ParseError(line_no, "unknown key '" + key + "'");
      if (raw.contains(key)) throw ParseError(line_no, "duplicate key '" + key + "'");
      raw[key] = {value, line_no};
    }
    for (const auto& k : keys) {
      if (auto it = raw.find(k.name); it != raw.end()) {
        values_[k.name] = it->second;
      } else if (k.fallback) {
        values_[k.name] = {*k.fallback, 0};
      } else {
        throw ParseError(0, std::string("missing required key '") + k.name + "'");
      }
    }
  }

  double number(const std::string& key) const {
    const auto& e = values_.at(key);
    const auto v = parse_number(e.value);
    if (!v || !std::isfinite(*v)) throw ParseError(e.line, "key '" + key + "': invalid number '" + e.value + "'");
    return *v;
  }

  int integer(const std::string& key) const {
    const auto& e = values_.at(key);
    int v = 0;
    const auto* end = e.value.data() + e.value.size();
    const auto res = std::from_chars(e.value.data(), end, v);
    if (res.ec != std::errc{} || res.ptr != end)
      throw ParseError(e.line, "key '" + key + "': invalid integer '" + e.value + "'");
    return v;
  }

  const Entry& entry(const std::string& key) const { return values_.at(key); }

 private:
  std::map<std::string, Entry> values_;
};

std::string read_text(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, std::string("cannot open ") + what + " '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void put(std::string& out, const char* key, const std::string& value) {
  out += key;
  out += " = ";
  out += value;
  out += '\n';
}

}  // namespace

FilterDesign parse_design(std::string_view text) {
  const KeyValues kv(text, design_keys);
  FilterDesign d;
  d.aperture = {kv.number("a_m"), kv.number("b_m"), kv.number("d_m")};
  d.coax = {kv.number("r_inner_m"), kv.number("r_outer_m")};
  d.coax_fill = Material{kv.number("coax_eps_r"), 1.0, 0.0};
  d.aperture_fill = Material{kv.number("aperture_eps_r"), 1.0, 0.0};
  d.apertures_per_section = kv.integer("apertures_per_section");
  d.sections = kv.integer("sections");
  d.section_pitch = kv.number("section_pitch_m");
  d.stopband_kappa = kv.number("stopband_kappa");

  const auto& axis = kv.entry("dominant_mode_axis");
  const std::string axis_name = to_upper(axis.value);
  if (axis_name == "WIDTH") d.dominant_mode_axis = ModeAxis::width;
  else if (axis_name == "HEIGHT") d.dominant_mode_axis = ModeAxis::height;
  else throw ParseError(axis.line, "dominant_mode_axis must be WIDTH or HEIGHT, got '" + axis.value + "'");

  if (const auto violations = validate(d); !violations.empty()) throw ParseError(0, "invalid design: " + violations.front());
  return d;
}

FilterDesign read_design_file(const std::string& path) { return parse_design(read_text(path, "design file")); }

std::string write_design(const FilterDesign& d) {
  std::string out = "# herd filter design (SI units)\n";
  put(out, "a_m", format_exact(d.aperture.width_a));
  put(out, "b_m", format_exact(d.aperture.height_b));
  put(out, "d_m", format_exact(d.aperture.depth_d));
  put(out, "r_inner_m", format_exact(d.coax.r_inner));
  put(out, "r_outer_m", format_exact(d.coax.r_outer));
  put(out, "coax_eps_r", format_exact(d.coax_fill.eps_r));
  put(out, "aperture_eps_r", format_exact(d.aperture_fill.eps_r));
  put(out, "apertures_per_section", std::to_string(d.apertures_per_section));
  put(out, "sections", std::to_string(d.sections));
  put(out, "section_pitch_m", format_exact(d.section_pitch));
  put(out, "stopband_kappa", format_exact(d.stopband_kappa));
  put(out, "dominant_mode_axis", to_string(d.dominant_mode_axis));
  return out;
}

DesignSpec parse_design_spec(std::string_view text) {
  const KeyValues kv(text, spec_keys);
  DesignSpec s;
  s.z0 = kv.number("z0_ohm");
  s.f_passband_top = kv.number("f_passband_top_hz");
  s.passband_il_budget_db = kv.number("passband_il_budget_db");
  s.f_stopband_start = kv.number("f_stopband_start_hz");
  s.stopband_min_attenuation_db = kv.number("stopband_min_attenuation_db");
  s.aperture_fill = Material{kv.number("aperture_eps_r"), 1.0, 0.0};
  s.coax_fill = Material{kv.number("coax_eps_r"), 1.0, 0.0};
  s.apertures_per_section = kv.integer("apertures_per_section");
  return s;
}

DesignSpec read_spec_file(const std::string& path) { return parse_design_spec(read_text(path, "spec file")); }

std::string write_design_spec(const DesignSpec& s) {
  std::string out = "# herd design targets (SI units)\n";
  put(out, "z0_ohm", format_exact(s.z0));
  put(out, "f_passband_top_hz", format_exact(s.f_passband_top));
  put(out, "passband_il_budget_db", format_exact(s.passband_il_budget_db));
  put(out, "f_stopband_start_hz", format_exact(s.f_stopband_start));
  put(out, "stopband_min_attenuation_db", format_exact(s.stopband_min_attenuation_db));
  put(out, "aperture_eps_r", format_exact(s.aperture_fill.eps_r));
  put(out, "coax_eps_r", format_exact(s.coax_fill.eps_r));
  put(out, "apertures_per_section", std::to_string(s.apertures_per_section));
  return out;
}

}  // namespace herd
