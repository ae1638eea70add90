#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "herd/cascade.hpp"
#include "herd/compliance.hpp"
#include "herd/constants.hpp"
#include "herd/core_model.hpp"
#include "herd/design_io.hpp"
#include "herd/errors.hpp"
#include "herd/format.hpp"
#include "herd/leakage.hpp"
#include "herd/modes.hpp"
#include "herd/synthesis.hpp"
#include "herd/touchstone.hpp"

namespace herd::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int csv_digits = 12;

// Bad flag combinations CLI11 cannot express; maps to exit_input_error.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string num(double v) { return format_number(v, csv_digits); }

double db20(Complex v) { return 20.0 * std::log10(std::abs(v)); }
double degrees(Complex v) { return std::arg(v) * 180.0 / constants::pi; }

// JSON has no inf/nan; emit null for them.
Json jnum(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

struct DesignSource {
  std::string path;
  bool prototype = false;
  std::optional<int> sections;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--design", path, "Design file (key = value)");
    cmd.add_flag("--prototype", prototype, "Use the built-in four-section prototype");
    cmd.add_option("--sections", sections, "Override the section count");
  }

  FilterDesign load() const {
    if (path.empty() == !prototype) throw UsageError("give exactly one of --design <path> or --prototype");
    FilterDesign d = prototype ? prototype_design() : read_design_file(path);
    if (sections) {
      d.sections = *sections;
      if (const auto v = validate(d); !v.empty()) throw UsageError(v.front());
    }
    return d;
  }
};

struct GridOptions {
  double fstart = 0.1e9;
  double fstop = 145e9;
  std::size_t points = 1000;
  bool log = false;
  bool linear = false;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--fstart", fstart, "Start frequency in Hz");
    cmd.add_option("--fstop", fstop, "Stop frequency in Hz");
    cmd.add_option("--points", points, "Number of grid points (>= 2)");
    auto* lg = cmd.add_flag("--log", log, "Logarithmic spacing");
    cmd.add_flag("--linear", linear, "Linear spacing")->excludes(lg);
  }

  bool use_log() const {
    if (log) return true;
    if (linear) return false;
    return fstop / fstart >= 100.0;  // full-band default
  }

  FrequencyGrid build() const {
    if (!(fstart > 0.0) || !(fstop > fstart)) throw UsageError("frequency range needs fstop > fstart > 0");
    if (points < 2) throw UsageError("--points must be at least 2");
    return use_log() ? FrequencyGrid::logarithmic(fstart, fstop, points)
                     : FrequencyGrid::linear(fstart, fstop, points);
  }
};

// Writes to --out when given, else to the command's stdout.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : to_file_(!path.empty()) {
    if (to_file_) {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
    }
    stream_ = to_file_ ? &file_ : &fallback;
  }
  std::ostream& stream() { return *stream_; }
  bool to_file() const { return to_file_; }

 private:
  bool to_file_;
  std::ofstream file_;
  std::ostream* stream_;
};

Json design_json(const FilterDesign& d) {
  Json j;
  j["a_m"] = d.aperture.width_a;
  j["b_m"] = d.aperture.height_b;
  j["d_m"] = d.aperture.depth_d;
  j["r_inner_m"] = d.coax.r_inner;
  j["r_outer_m"] = d.coax.r_outer;
  j["coax_eps_r"] = d.coax_fill.eps_r;
  j["aperture_eps_r"] = d.aperture_fill.eps_r;
  j["apertures_per_section"] = d.apertures_per_section;
  j["sections"] = d.sections;
  j["section_pitch_m"] = d.section_pitch;
  j["stopband_kappa"] = d.stopband_kappa;
  j["dominant_mode_axis"] = to_string(d.dominant_mode_axis);
  return j;
}

Json band_json(Band b) { return Json::array({b.low, b.high}); }

Json metric_json(const BandMetric& m) {
  Json j;
  j["band_hz"] = band_json(m.band);
  j["points"] = m.points;
  j["max_insertion_loss_db"] = jnum(m.max_insertion_loss_db);
  j["min_attenuation_db"] = jnum(m.min_attenuation_db);
  j["max_ripple_db"] = jnum(m.max_ripple_db);
  j["worst_return_loss_db"] = jnum(m.worst_return_loss_db);
  return j;
}

Json report_json(const std::string& profile, const ComplianceReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    Json row;
    row["claim"] = r.description;
    row["kind"] = to_string(r.claim.kind);
    row["band_hz"] = band_json(r.claim.band);
    row["threshold_db"] = r.claim.threshold_db;
    row["observed_db"] = jnum(r.observed_db);
    row["pass"] = r.pass;
    row["error"] = r.error ? Json(*r.error) : Json(nullptr);
    rows.push_back(row);
  }
  Json j;
  j["profile"] = profile;
  j["pass"] = report.pass();
  j["rows"] = rows;
  return j;
}

std::vector<std::string> report_lines(const ComplianceReport& report) {
  std::vector<std::string> lines;
  for (const auto& r : report.rows) {
    std::string line = std::string(r.pass ? "PASS" : "FAIL") + "  " + r.description + "  observed ";
    line += r.error ? "n/a (" + *r.error + ")" : format_number(r.observed_db, 6) + " dB";
    lines.push_back(line);
  }
  lines.push_back(std::string("overall: ") + (report.pass() ? "PASS" : "FAIL"));
  return lines;
}

std::vector<std::string> metric_lines(const std::vector<Claim>& claims, const SParamTable& table,
                                      std::vector<BandMetric>* collected) {
  std::vector<std::string> lines;
  std::vector<Band> seen;
  for (const auto& c : claims) {
    if (std::find(seen.begin(), seen.end(), c.band) != seen.end()) continue;
    seen.push_back(c.band);
    std::ostringstream s;
    s << "band [" << num(c.band.low) << ", " << num(c.band.high) << "] Hz: ";
    try {
      const auto m = band_metrics(table, c.band);
      if (collected) collected->push_back(m);
      s << "points=" << m.points << " max_il_db=" << num(m.max_insertion_loss_db)
        << " min_att_db=" << num(m.min_attenuation_db) << " ripple_db=" << num(m.max_ripple_db)
        << " worst_rl_db=" << num(m.worst_return_loss_db);
    } catch (const DomainError&) {
      s << "no data";
    }
    lines.push_back(s.str());
  }
  return lines;
}

void check_format(const std::string& fmt, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (fmt == a) return;
  throw UsageError("unsupported --format '" + fmt + "' for this command");
}

// ---------------------------------------------------------------- modes

struct ModesArgs {
  DesignSource source;
  std::optional<double> z0;
  std::optional<double> single_mode;
  double coax_eps_r = 1.0;
  double f_max = 60e9;
  std::string format = "text";
  std::string out;
};

int cmd_modes(const ModesArgs& a, std::ostream& stdout_) {
  check_format(a.format, {"text", "csv", "json"});
  Sink sink(a.out, stdout_);
  auto& os = sink.stream();

  if (a.z0 || a.single_mode) {
    if (!(a.z0 && a.single_mode)) throw UsageError("--z0 and --single-mode must be given together");
    const Material fill{a.coax_eps_r, 1.0, 0.0};
    const double ratio = coax_ratio_for_impedance(*a.z0, fill);
    const CoaxGeometry g = solve_inner_radius(*a.z0, *a.single_mode, fill);
    if (a.format == "json") {
      Json j;
      j["command"] = "modes";
      j["z0_ohm"] = *a.z0;
      j["single_mode_hz"] = *a.single_mode;
      j["coax_eps_r"] = a.coax_eps_r;
      j["ratio"] = ratio;
      j["r_inner_m"] = g.r_inner;
      j["r_outer_m"] = g.r_outer;
      os << j.dump(2) << '\n';
    } else if (a.format == "csv") {
      os << "z0_ohm,single_mode_hz,ratio,r_inner_m,r_outer_m\n"
         << num(*a.z0) << ',' << num(*a.single_mode) << ',' << num(ratio) << ',' << num(g.r_inner) << ','
         << num(g.r_outer) << '\n';
    } else {
      os << "radius ratio r_o/r_i: " << num(ratio) << '\n'
         << "r_inner: " << format_number(g.r_inner * 1e3, 6) << " mm\n"
         << "r_outer: " << format_number(g.r_outer * 1e3, 6) << " mm\n";
    }
    return exit_ok;
  }

  const FilterDesign d = a.source.load();
  const double z0 = coax_char_impedance(d.coax, d.coax_fill);
  const double single_mode = coax_first_higher_mode_cutoff(d.coax, d.coax_fill);
  const double corner = corner_frequency(d);
  const auto chart = mode_chart(d.aperture, d.aperture_fill, a.f_max);

  if (a.format == "json") {
    Json j;
    j["command"] = "modes";
    j["design"] = design_json(d);
    j["z0_ohm"] = z0;
    j["single_mode_limit_hz"] = single_mode;
    j["corner_frequency_hz"] = corner;
    j["f_max_hz"] = a.f_max;
    Json modes = Json::array();
    for (const auto& e : chart) modes.push_back({{"m", e.index.m}, {"n", e.index.n}, {"cutoff_hz", e.cutoff_hz}});
    j["modes"] = modes;
    os << j.dump(2) << '\n';
  } else if (a.format == "csv") {
    os << "# z0_ohm=" << num(z0) << '\n'
       << "# single_mode_limit_hz=" << num(single_mode) << '\n'
       << "# corner_frequency_hz=" << num(corner) << '\n'
       << "m,n,cutoff_hz\n";
    for (const auto& e : chart) os << e.index.m << ',' << e.index.n << ',' << num(e.cutoff_hz) << '\n';
  } else {
    os << "characteristic impedance: " << format_number(z0, 6) << " ohm\n"
       << "single-mode limit:        " << format_number(single_mode / 1e9, 6) << " GHz\n"
       << "corner frequency:         " << format_number(corner / 1e9, 6) << " GHz ("
       << to_string(d.dominant_mode_axis) << " axis)\n"
       << "aperture TE modes up to " << format_number(a.f_max / 1e9, 6) << " GHz:\n";
    for (const auto& e : chart)
      os << "  TE" << e.index.m << e.index.n << "  " << format_number(e.cutoff_hz / 1e9, 6) << " GHz\n";
  }
  return exit_ok;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
  DesignSource source;
  GridOptions grid;
  std::string format = "csv";
  std::string out;
  std::string claims;
  std::optional<double> return_loss_floor;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& stdout_) {
  check_format(a.format, {"csv", "json", "touchstone"});
  const FilterDesign d = a.source.load();
  const FrequencyGrid grid = a.grid.build();
  CascadeOptions opts;
  opts.return_loss_floor_db = a.return_loss_floor;
  if (opts.return_loss_floor_db && !(*opts.return_loss_floor_db < 0.0))
    throw UsageError("--return-loss-floor must be negative (dB)");

  const SParamTable table = filter_response(d, grid, opts);
  const std::string profile = a.claims.empty() ? "default" : a.claims;
  const auto claims = claims_profile(profile);
  std::optional<ComplianceReport> report;
  if (!a.claims.empty()) report = check_claims(table, claims);

  std::vector<BandMetric> metrics;
  const auto mlines = metric_lines(claims, table, &metrics);
  std::vector<std::string> summary = mlines;
  if (report) {
    summary.push_back("claims profile: " + profile);
    for (auto& l : report_lines(*report)) summary.push_back(l);
  }

  Sink sink(a.out, stdout_);
  auto& os = sink.stream();
  if (a.format == "json") {
    Json j;
    j["command"] = "analyze";
    j["design"] = design_json(d);
    j["grid"] = {{"start_hz", grid.points().front()},
                 {"stop_hz", grid.points().back()},
                 {"points", grid.size()},
                 {"spacing", a.grid.use_log() ? "log" : "linear"}};
    Json data = Json::array();
    for (std::size_t i = 0; i < table.size(); ++i) {
      const auto& p = table.entries[i];
      data.push_back({{"f_hz", grid[i]},
                      {"s11_db", jnum(db20(p.s11))},
                      {"s21_db", jnum(db20(p.s21))},
                      {"s21_deg", degrees(p.s21)},
                      {"s22_db", jnum(db20(p.s22))},
                      {"il_db", jnum(insertion_loss_db(p))}});
    }
    j["data"] = data;
    Json mj = Json::array();
    for (const auto& m : metrics) mj.push_back(metric_json(m));
    j["metrics"] = mj;
    j["claims"] = report ? report_json(profile, *report) : Json(nullptr);
    os << j.dump(2) << '\n';
    if (sink.to_file())
      for (const auto& l : summary) stdout_ << l << '\n';
  } else {
    const char* comment = "# ";
    if (a.format == "touchstone") {
      os << write_touchstone(table, TouchstoneFormat::db, FrequencyUnit::ghz);
      comment = "! ";
    } else {
      os << "f_hz,s11_db,s21_db,s21_deg,s22_db,il_db\n";
      for (std::size_t i = 0; i < table.size(); ++i) {
        const auto& p = table.entries[i];
        os << num(grid[i]) << ',' << num(db20(p.s11)) << ',' << num(db20(p.s21)) << ',' << num(degrees(p.s21))
           << ',' << num(db20(p.s22)) << ',' << num(insertion_loss_db(p)) << '\n';
      }
    }
    for (const auto& l : summary) {
      if (sink.to_file()) stdout_ << l << '\n';
      else os << comment << l << '\n';
    }
  }
  return report && !report->pass() ? exit_claims_failed : exit_ok;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  DesignSource source;
  std::string param;
  double from = 0.0;
  double to = 0.0;
  int steps = 11;
  double f_ref = 10e9;
  std::string format = "csv";
  std::string out;
};

int cmd_sweep(const SweepArgs& a, std::ostream& stdout_) {
  check_format(a.format, {"csv", "json"});
  if (a.param != "a" && a.param != "b" && a.param != "d")
    throw UsageError("--param must be one of a, b, d (got '" + a.param + "')");
  if (!(a.from > 0.0) || !(a.to > 0.0)) throw UsageError("sweep bounds must be positive");
  if (a.steps < 2) throw UsageError("--steps must be at least 2");
  const FilterDesign base = a.source.load();

  struct Row {
    double value, corner, il;
  };
  std::vector<Row> rows;
  for (int i = 0; i < a.steps; ++i) {
    const double t = static_cast<double>(i) / (a.steps - 1);
    const double v = i == a.steps - 1 ? a.to : a.from + (a.to - a.from) * t;
    FilterDesign d = base;
    if (a.param == "a") d.aperture.width_a = v;
    else if (a.param == "b") d.aperture.height_b = v;
    else d.aperture.depth_d = v;
    const double corner = corner_frequency(d);
    const double il =
        a.f_ref < corner ? inband_transmission(d, a.f_ref).insertion_loss_db : std::numeric_limits<double>::quiet_NaN();
    rows.push_back({v, corner, il});
  }

  Sink sink(a.out, stdout_);
  auto& os = sink.stream();
  if (a.format == "json") {
    Json j;
    j["command"] = "sweep";
    j["parameter"] = a.param;
    j["f_ref_hz"] = a.f_ref;
    Json jr = Json::array();
    for (const auto& r : rows) jr.push_back({{"value_m", r.value}, {"corner_hz", r.corner}, {"il_db", jnum(r.il)}});
    j["rows"] = jr;
    os << j.dump(2) << '\n';
  } else {
    os << "value_m,corner_hz,il_db_at_" << num(a.f_ref) << "_hz\n";
    for (const auto& r : rows) os << num(r.value) << ',' << num(r.corner) << ',' << num(r.il) << '\n';
  }
  return exit_ok;
}

// ---------------------------------------------------------------- sections

struct SectionsArgs {
  DesignSource source;
  std::vector<std::string> freqs;
  int max_sections = 8;
  std::string format = "csv";
  std::string out;
};

int cmd_sections(const SectionsArgs& a, std::ostream& stdout_) {
  check_format(a.format, {"csv", "json"});
  if (a.freqs.empty()) throw UsageError("--freqs needs at least one frequency");
  if (a.max_sections < 1) throw UsageError("--max-sections must be >= 1");
  std::vector<double> freqs;
  for (const auto& s : a.freqs) {
    const auto v = parse_number(trim(s));
    if (!v || !(*v > 0.0) || !std::isfinite(*v)) throw UsageError("unparsable frequency '" + s + "'");
    freqs.push_back(*v);
  }
  const FilterDesign d = a.source.load();

  std::vector<std::vector<std::pair<int, double>>> columns;
  for (double f : freqs) columns.push_back(attenuation_vs_sections(d, f, a.max_sections));

  Sink sink(a.out, stdout_);
  auto& os = sink.stream();
  if (a.format == "json") {
    Json j;
    j["command"] = "sections";
    j["frequencies_hz"] = freqs;
    Json rows = Json::array();
    for (int k = 0; k < a.max_sections; ++k) {
      Json att = Json::array();
      for (const auto& col : columns) att.push_back(col[static_cast<std::size_t>(k)].second);
      rows.push_back({{"sections", k + 1}, {"attenuation_db", att}});
    }
    j["rows"] = rows;
    os << j.dump(2) << '\n';
  } else {
    os << "sections";
    for (double f : freqs) os << ",att_db_at_" << num(f) << "_hz";
    os << '\n';
    for (int k = 0; k < a.max_sections; ++k) {
      os << k + 1;
      for (const auto& col : columns) os << ',' << num(col[static_cast<std::size_t>(k)].second);
      os << '\n';
    }
  }
  return exit_ok;
}

// ---------------------------------------------------------------- synthesize

struct SynthesizeArgs {
  std::string spec;
  std::string out;
  std::string format = "text";
};

int cmd_synthesize(const SynthesizeArgs& a, std::ostream& stdout_) {
  check_format(a.format, {"text", "json"});
  if (a.spec.empty()) throw UsageError("--spec <path> is required");
  const DesignSpec spec = read_spec_file(a.spec);
  const SynthesisReport report = synthesize(spec);
  const std::string design_text = write_design(report.design);

  if (!a.out.empty()) {
    std::ofstream f(a.out, std::ios::binary);
    if (!f) throw UsageError("cannot open output file '" + a.out + "'");
    f << design_text;
  }
  if (a.format == "json") {
    Json j;
    j["command"] = "synthesize";
    j["design"] = design_json(report.design);
    j["margin_passband_db"] = report.margin_passband_db;
    j["margin_stopband_db"] = report.margin_stopband_db;
    j["total_length_m"] = report.total_length;
    stdout_ << j.dump(2) << '\n';
  } else {
    if (a.out.empty()) stdout_ << design_text;
    stdout_ << "# passband margin: " << format_number(report.margin_passband_db, 6) << " dB\n"
            << "# stopband margin: " << format_number(report.margin_stopband_db, 6) << " dB\n"
            << "# total length:    " << format_number(report.total_length * 1e3, 6) << " mm\n";
  }
  return exit_ok;
}

// ---------------------------------------------------------------- compare

struct CompareArgs {
  std::string measured;
  DesignSource source;
  std::string claims = "default";
  std::string format = "text";
};

int cmd_compare(const CompareArgs& a, std::ostream& stdout_) {
  check_format(a.format, {"text", "json"});
  if (a.measured.empty()) throw UsageError("--measured <path> is required");
  const SParamTable measured = read_touchstone_file(a.measured);
  const FilterDesign d = a.source.load();
  const auto claims = claims_profile(a.claims);
  const ComplianceReport report = check_claims(measured, claims);
  const SParamTable model = filter_response(d, measured.grid);

  struct Deviation {
    Band band;
    std::optional<double> max_abs_db;
  };
  std::vector<Deviation> deviations;
  for (const auto& c : claims) {
    if (std::any_of(deviations.begin(), deviations.end(), [&](const Deviation& x) { return x.band == c.band; }))
      continue;
    Deviation dev{c.band, std::nullopt};
    for (std::size_t i = 0; i < measured.size(); ++i) {
      if (!c.band.contains(measured.grid[i])) continue;
      const double delta =
          std::abs(insertion_loss_db(measured.entries[i]) - insertion_loss_db(model.entries[i]));
      dev.max_abs_db = std::max(dev.max_abs_db.value_or(0.0), delta);
    }
    deviations.push_back(dev);
  }

  if (a.format == "json") {
    Json j;
    j["command"] = "compare";
    j["label"] = measured.label;
    j["points"] = measured.size();
    j["magnitude_only"] = measured.magnitude_only;
    j["claims"] = report_json(a.claims, report);
    Json dj = Json::array();
    for (const auto& dev : deviations)
      dj.push_back({{"band_hz", band_json(dev.band)},
                    {"max_abs_il_deviation_db", dev.max_abs_db ? jnum(*dev.max_abs_db) : Json(nullptr)}});
    j["deviation"] = dj;
    stdout_ << j.dump(2) << '\n';
  } else {
    stdout_ << "measured: " << measured.label << " (" << measured.size() << " points)\n";
    if (measured.magnitude_only) stdout_ << "phase absent: magnitude-only data, metrics use magnitudes\n";
    stdout_ << "claims profile: " << a.claims << '\n';
    for (const auto& l : report_lines(report)) stdout_ << l << '\n';
    for (const auto& dev : deviations) {
      stdout_ << "max |IL_measured - IL_model| over [" << num(dev.band.low) << ", " << num(dev.band.high)
              << "] Hz: " << (dev.max_abs_db ? format_number(*dev.max_abs_db, 6) + " dB" : "no data") << '\n';
    }
  }
  return report.pass() ? exit_ok : exit_claims_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Leaky-coax low-pass filter design and verification", "herd"};
  app.require_subcommand(1);

  ModesArgs modes;
  auto* modes_cmd = app.add_subcommand("modes", "Impedance, single-mode limit, corner frequency and aperture modes");
  modes.source.add_to(*modes_cmd);
  modes_cmd->add_option("--z0", modes.z0, "Target impedance (ohm) for the radius shortcut");
  modes_cmd->add_option("--single-mode", modes.single_mode, "Single-mode limit (Hz) for the radius shortcut");
  modes_cmd->add_option("--coax-eps-r", modes.coax_eps_r, "Coax fill permittivity for the shortcut");
  modes_cmd->add_option("--fmax", modes.f_max, "Upper frequency of the mode chart (Hz)");
  modes_cmd->add_option("--format", modes.format, "text|csv|json");
  modes_cmd->add_option("--out", modes.out, "Output path");

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Model S-parameters, band metrics and claim checks");
  analyze.source.add_to(*analyze_cmd);
  analyze.grid.add_to(*analyze_cmd);
  analyze_cmd->add_option("--format", analyze.format, "csv|json|touchstone");
  analyze_cmd->add_option("--out", analyze.out, "Output path");
  analyze_cmd->add_option("--claims,--require-claims", analyze.claims, "Claims profile: default|strict12");
  analyze_cmd->add_option("--return-loss-floor", analyze.return_loss_floor, "Per-section return loss (dB, < 0)");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep one aperture dimension");
  sweep.source.add_to(*sweep_cmd);
  sweep_cmd->add_option("--param", sweep.param, "a|b|d")->required();
  sweep_cmd->add_option("--from", sweep.from, "First value (m)")->required();
  sweep_cmd->add_option("--to", sweep.to, "Last value (m)")->required();
  sweep_cmd->add_option("--steps", sweep.steps, "Number of values (>= 2)");
  sweep_cmd->add_option("--fref", sweep.f_ref, "Reference frequency for in-band loss (Hz)");
  sweep_cmd->add_option("--format", sweep.format, "csv|json");
  sweep_cmd->add_option("--out", sweep.out, "Output path");

  SectionsArgs sections;
  auto* sections_cmd = app.add_subcommand("sections", "Attenuation versus section count");
  sections.source.add_to(*sections_cmd);
  sections_cmd->add_option("--freqs", sections.freqs, "Frequencies in Hz, comma separated")
      ->required()
      ->delimiter(',');
  sections_cmd->add_option("--max-sections", sections.max_sections, "Largest section count");
  sections_cmd->add_option("--format", sections.format, "csv|json");
  sections_cmd->add_option("--out", sections.out, "Output path");

  SynthesizeArgs synth;
  auto* synth_cmd = app.add_subcommand("synthesize", "Design a filter from performance targets");
  synth_cmd->add_option("--spec", synth.spec, "Spec file (key = value)");
  synth_cmd->add_option("--out", synth.out, "Design file to write");
  synth_cmd->add_option("--format", synth.format, "text|json");

  CompareArgs compare;
  auto* compare_cmd = app.add_subcommand("compare", "Check measured Touchstone data against claims and the model");
  compare_cmd->add_option("--measured", compare.measured, "Measured .s2p file");
  compare.source.add_to(*compare_cmd);
  compare_cmd->add_option("--claims", compare.claims, "Claims profile: default|strict12");
  compare_cmd->add_option("--format", compare.format, "text|json");

  std::vector<std::string> argv_storage{"herd"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input_error;
  }

  try {
    if (*modes_cmd) return cmd_modes(modes, out);
    if (*analyze_cmd) return cmd_analyze(analyze, out);
    if (*sweep_cmd) return cmd_sweep(sweep, out);
    if (*sections_cmd) return cmd_sections(sections, out);
    if (*synth_cmd) return cmd_synthesize(synth, out);
    if (*compare_cmd) return cmd_compare(compare, out);
  } catch (const InfeasibleError& e) {
    err << "herd: " << e.what() << '\n';
    return exit_infeasible;
  } catch (const ParseError& e) {
    err << "herd: parse error: " << e.what() << '\n';
    return exit_input_error;
  } catch (const std::exception& e) {
    err << "herd: " << e.what() << '\n';
    return exit_input_error;
  }
  return exit_input_error;
}

}  // namespace herd::cli
