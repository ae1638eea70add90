#include "herd/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "herd/cascade.hpp"
#include "herd/constants.hpp"
#include "herd/errors.hpp"
#include "herd/leakage.hpp"
#include "herd/modes.hpp"

namespace herd {

using constants::c0;

namespace {

constexpr std::size_t passband_points = 256;
constexpr std::size_t stopband_points = 512;

void require_positive(double v, const char* name) {
  if (!(std::isfinite(v) && v > 0.0)) {
    std::ostringstream msg;
    msg << name << " must be positive and finite";
    throw DomainError(msg.str());
  }
}

void check_spec(const DesignSpec& spec) {
  require_positive(spec.z0, "z0");
  require_positive(spec.f_passband_top, "f_passband_top");
  require_positive(spec.passband_il_budget_db, "passband_il_budget_db");
  require_positive(spec.f_stopband_start, "f_stopband_start");
  require_positive(spec.stopband_min_attenuation_db, "stopband_min_attenuation_db");
  require_valid(spec.aperture_fill);
  require_valid(spec.coax_fill);
  if (spec.apertures_per_section < 1) throw DomainError("apertures_per_section must be >= 1");
}

double passband_loss_db(const FilterDesign& design, double f, double corner) {
  if (f < corner) return inband_transmission(design, f).insertion_loss_db;
  return insertion_loss_db(filter_response(design, FrequencyGrid({f})).entries.front());
}

}  // namespace

double pair_breaking_frequency(double gap_energy_ev) {
  require_positive(gap_energy_ev, "gap energy");
  return 2.0 * gap_energy_ev * constants::elementary_charge / constants::planck_h;
}

double max_aperture_width(double r_outer, int face_count) {
  if (face_count < 3) throw DomainError("outer body needs at least 3 faces");
  return 2.0 * r_outer * std::tan(constants::pi / face_count);
}

SynthesisReport synthesize(const DesignSpec& spec, const SynthesisOptions& opts) {
  check_spec(spec);
  require_positive(opts.single_mode_margin, "single_mode_margin");
  require_positive(opts.height_to_width, "height_to_width");
  require_positive(opts.section_pitch, "section_pitch");
  if (!(opts.stopband_kappa > 0.0 && opts.stopband_kappa < 1.0))
    throw DomainError("stopband_kappa must lie in (0, 1)");

  if (!(spec.f_stopband_start > spec.f_passband_top)) {
    std::ostringstream msg;
    msg << "infeasible: stopband start " << spec.f_stopband_start << " Hz must lie above passband top "
        << spec.f_passband_top << " Hz";
    throw InfeasibleError(msg.str());
  }

  FilterDesign d;
  d.coax_fill = spec.coax_fill;
  d.aperture_fill = spec.aperture_fill;
  d.apertures_per_section = spec.apertures_per_section;
  d.section_pitch = opts.section_pitch;
  d.stopband_kappa = opts.stopband_kappa;
  d.dominant_mode_axis = ModeAxis::width;

  d.coax = solve_inner_radius(spec.z0, spec.f_passband_top * opts.single_mode_margin, spec.coax_fill);

  const double width = c0 / (2.0 * spec.f_stopband_start * spec.aperture_fill.index());
  const double width_limit = max_aperture_width(d.coax.r_outer, opts.face_count);
  if (!(width < width_limit)) {
    std::ostringstream msg;
    msg << "infeasible: aperture width " << width * 1e3 << " mm must be below 2 r_outer tan(pi/"
        << opts.face_count << ") = " << width_limit * 1e3 << " mm";
    throw InfeasibleError(msg.str());
  }
  d.aperture.width_a = width;
  d.aperture.height_b = opts.height_to_width * width;

  const double per_section = stopband_section_db(opts.stopband_kappa, spec.apertures_per_section);
  const double needed = std::ceil(spec.stopband_min_attenuation_db / per_section);
  if (needed > static_cast<double>(std::numeric_limits<int>::max() / spec.apertures_per_section))
    throw InfeasibleError("infeasible: section count overflows");
  d.sections = std::max(1, static_cast<int>(needed));

  d.aperture.depth_d = 1.0;  // placeholder, ignored by min_depth_for_budget
  d.aperture.depth_d = min_depth_for_budget(d, spec.f_passband_top, spec.passband_il_budget_db);
  if (!(d.aperture.depth_d > 0.0)) throw InfeasibleError("infeasible: depth resolved to zero");

  return verify(d, spec);
}

SynthesisReport verify(const FilterDesign& design, const DesignSpec& spec) {
  require_valid(design);
  check_spec(spec);

  SynthesisReport report;
  report.design = design;
  report.total_length = design.sections * design.section_pitch;

  const double corner = corner_frequency(design);
  const auto pass_grid =
      FrequencyGrid::linear(spec.f_passband_top / passband_points, spec.f_passband_top, passband_points);
  double worst_il = 0.0;
  for (double f : pass_grid) worst_il = std::max(worst_il, passband_loss_db(design, f, corner));
  report.margin_passband_db = spec.passband_il_budget_db - worst_il;

  const auto stop_grid =
      FrequencyGrid::linear(spec.f_stopband_start, 2.0 * spec.f_stopband_start, stopband_points);
  const auto response = filter_response(design, stop_grid);
  double min_att = std::numeric_limits<double>::infinity();
  for (const auto& port : response.entries) min_att = std::min(min_att, insertion_loss_db(port));
  report.margin_stopband_db = min_att - spec.stopband_min_attenuation_db;
  return report;
}

}  // namespace herd
