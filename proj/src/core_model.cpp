#include "herd/core_model.hpp"

#include <cmath>
#include <sstream>

#include "herd/errors.hpp"

namespace herd {

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

void throw_first(const std::vector<std::string>& violations) {
  if (!violations.empty()) throw DomainError(violations.front());
}

}  // namespace

double Material::index() const { return std::sqrt(eps_r * mu_r); }

FrequencyGrid::FrequencyGrid(std::vector<double> points) : points_(std::move(points)) {
  if (points_.empty()) throw DomainError("frequency grid is empty");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!positive_finite(points_[i])) {
      std::ostringstream msg;
      msg << "frequency grid point " << i << " (" << points_[i] << " Hz) is not a positive finite value";
      throw DomainError(msg.str());
    }
    if (i > 0 && !(points_[i] > points_[i - 1])) {
      std::ostringstream msg;
      msg << "frequency grid is not strictly increasing at point " << i << " (" << points_[i] << " Hz)";
      throw DomainError(msg.str());
    }
  }
}

FrequencyGrid FrequencyGrid::linear(double start, double stop, std::size_t count) {
  if (!positive_finite(start) || !positive_finite(stop)) throw DomainError("grid bounds must be positive");
  if (count == 1) {
    if (start != stop) throw DomainError("single-point grid needs start == stop");
    return FrequencyGrid({start});
  }
  if (count < 2 || !(stop > start)) throw DomainError("grid needs stop > start and at least 2 points");
  std::vector<double> pts(count);
  const double step = (stop - start) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i + 1 < count; ++i) pts[i] = start + step * static_cast<double>(i);
  pts.back() = stop;
  return FrequencyGrid(std::move(pts));
}

FrequencyGrid FrequencyGrid::logarithmic(double start, double stop, std::size_t count) {
  if (!positive_finite(start) || !positive_finite(stop)) throw DomainError("grid bounds must be positive");
  if (count < 2 || !(stop > start)) throw DomainError("grid needs stop > start and at least 2 points");
  std::vector<double> pts(count);
  const double l0 = std::log(start);
  const double step = (std::log(stop) - l0) / static_cast<double>(count - 1);
  pts.front() = start;
  for (std::size_t i = 1; i + 1 < count; ++i) pts[i] = std::exp(l0 + step * static_cast<double>(i));
  pts.back() = stop;
  return FrequencyGrid(std::move(pts));
}

FilterDesign prototype_design() {
  FilterDesign d;
  d.coax = {1.59e-3, 3.65e-3};
  d.coax_fill = Material::air();
  d.aperture = {4.0e-3, 5.0e-3, 4.85e-3};
  d.aperture_fill = Material::ptfe();
  d.apertures_per_section = 8;
  d.sections = 4;
  d.section_pitch = FilterDesign::default_section_pitch;
  d.stopband_kappa = FilterDesign::default_stopband_kappa;
  d.dominant_mode_axis = ModeAxis::width;
  return d;
}

std::vector<std::string> validate(const Material& m, const std::string& field) {
  std::vector<std::string> out;
  if (!std::isfinite(m.eps_r) || m.eps_r < 1.0) out.push_back(field + ".eps_r must be finite and >= 1");
  if (!std::isfinite(m.mu_r) || m.mu_r < 1.0) out.push_back(field + ".mu_r must be finite and >= 1");
  if (!std::isfinite(m.loss_tangent) || m.loss_tangent < 0.0)
    out.push_back(field + ".loss_tangent must be finite and >= 0");
  return out;
}

std::vector<std::string> validate(const FilterDesign& d) {
  std::vector<std::string> out;
  auto append = [&out](std::vector<std::string> more) {
    out.insert(out.end(), more.begin(), more.end());
  };

  if (!positive_finite(d.coax.r_inner)) out.push_back("coax.r_inner must be positive and finite");
  if (!positive_finite(d.coax.r_outer)) out.push_back("coax.r_outer must be positive and finite");
  if (positive_finite(d.coax.r_inner) && positive_finite(d.coax.r_outer) && !(d.coax.r_inner < d.coax.r_outer))
    out.push_back("coax radii must satisfy r_inner < r_outer");
  append(validate(d.coax_fill, "coax_fill"));
  if (!positive_finite(d.aperture.width_a)) out.push_back("aperture.width_a must be positive and finite");
  if (!positive_finite(d.aperture.height_b)) out.push_back("aperture.height_b must be positive and finite");
  if (!positive_finite(d.aperture.depth_d)) out.push_back("aperture.depth_d must be positive and finite");
  append(validate(d.aperture_fill, "aperture_fill"));
  if (d.apertures_per_section < 1) out.push_back("apertures_per_section must be >= 1");
  if (d.sections < 1) out.push_back("sections must be >= 1");
  if (!positive_finite(d.section_pitch)) out.push_back("section_pitch must be positive and finite");
  if (!(d.stopband_kappa > 0.0 && d.stopband_kappa < 1.0)) out.push_back("stopband_kappa must lie in (0, 1)");
  if (d.dominant_mode_axis != ModeAxis::width && d.dominant_mode_axis != ModeAxis::height)
    out.push_back("dominant_mode_axis must be WIDTH or HEIGHT");
  return out;
}

void require_valid(const FilterDesign& design) { throw_first(validate(design)); }

void require_valid(const CoaxGeometry& g) {
  if (!positive_finite(g.r_inner) || !positive_finite(g.r_outer) || !(g.r_inner < g.r_outer))
    throw DomainError("coax geometry requires 0 < r_inner < r_outer");
}

void require_valid(const RectAperture& ap) {
  if (!positive_finite(ap.width_a) || !positive_finite(ap.height_b) || !positive_finite(ap.depth_d))
    throw DomainError("aperture width, height and depth must be positive and finite");
}

void require_valid(const Material& m) { throw_first(validate(m, "material")); }

std::string to_string(ModeAxis axis) { return axis == ModeAxis::width ? "WIDTH" : "HEIGHT"; }

}  // namespace herd
