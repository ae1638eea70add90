#include "herd/modes.hpp"

#include <algorithm>
#include <cmath>

#include "herd/constants.hpp"
#include "herd/errors.hpp"

namespace herd {

using constants::c0;
using constants::eta0;
using constants::pi;

namespace {

void require_mode(ModeIndex idx) {
  if (idx.m < 0 || idx.n < 0) throw DomainError("mode indices must be non-negative");
  if (idx.m == 0 && idx.n == 0) throw DomainError("TE00 does not exist");
}

void require_cross_section(const RectAperture& ap) {
  if (!(std::isfinite(ap.width_a) && ap.width_a > 0.0 && std::isfinite(ap.height_b) && ap.height_b > 0.0))
    throw DomainError("aperture width and height must be positive and finite");
}

// (m pi / a)^2 + (n pi / b)^2
double transverse_wavenumber_sq(ModeIndex idx, const RectAperture& ap) {
  const double kx = idx.m * pi / ap.width_a;
  const double ky = idx.n * pi / ap.height_b;
  return kx * kx + ky * ky;
}

}  // namespace

double coax_char_impedance(const CoaxGeometry& geom, const Material& fill) {
  require_valid(geom);
  require_valid(fill);
  return eta0 / (2.0 * pi) * std::sqrt(fill.mu_r / fill.eps_r) * std::log(geom.r_outer / geom.r_inner);
}

double coax_ratio_for_impedance(double z0, const Material& fill) {
  if (!(std::isfinite(z0) && z0 > 0.0)) throw DomainError("characteristic impedance must be positive");
  require_valid(fill);
  return std::exp(2.0 * pi * z0 / (eta0 * std::sqrt(fill.mu_r / fill.eps_r)));
}

double coax_first_higher_mode_cutoff(const CoaxGeometry& geom, const Material& fill) {
  require_valid(geom);
  require_valid(fill);
  return c0 / (fill.index() * pi * (geom.r_outer + geom.r_inner));
}

CoaxGeometry solve_inner_radius(double z0, double f_single_mode, const Material& fill) {
  if (!(std::isfinite(f_single_mode) && f_single_mode > 0.0))
    throw DomainError("single-mode frequency must be positive");
  const double ratio = coax_ratio_for_impedance(z0, fill);
  const double r_inner = c0 / (fill.index() * f_single_mode * pi * (1.0 + ratio));
  return {r_inner, ratio * r_inner};
}

double rect_cutoff(ModeIndex index, const RectAperture& ap, const Material& fill) {
  require_mode(index);
  require_cross_section(ap);
  require_valid(fill);
  return c0 / (2.0 * fill.index()) * std::hypot(index.m / ap.width_a, index.n / ap.height_b);
}

std::complex<double> rect_gamma(ModeIndex index, const RectAperture& ap, const Material& fill, double f) {
  require_mode(index);
  require_cross_section(ap);
  require_valid(fill);
  if (!(std::isfinite(f) && f > 0.0)) throw DomainError("frequency must be positive");

  const double k0 = 2.0 * pi * f * fill.index() / c0;
  const double kc2 = transverse_wavenumber_sq(index, ap);
  const double k02 = k0 * k0;
  if (kc2 > k02) return {std::sqrt(kc2 - k02), 0.0};
  if (kc2 < k02) return {0.0, std::sqrt(k02 - kc2)};
  return {0.0, 0.0};
}

std::vector<ModeEntry> mode_chart(const RectAperture& ap, const Material& fill, double f_max) {
  if (!(std::isfinite(f_max) && f_max > 0.0)) throw DomainError("f_max must be positive");
  require_cross_section(ap);
  require_valid(fill);

  const auto bound = [&](double dim) {
    return static_cast<int>(std::ceil(2.0 * f_max * dim * fill.index() / c0)) + 1;
  };
  const int m_max = bound(ap.width_a);
  const int n_max = bound(ap.height_b);

  std::vector<ModeEntry> chart;
  for (int m = 0; m <= m_max; ++m) {
    for (int n = 0; n <= n_max; ++n) {
      if (m == 0 && n == 0) continue;
      const ModeIndex idx{m, n};
      const double fc = rect_cutoff(idx, ap, fill);
      if (fc <= f_max) chart.push_back({idx, fc});
    }
  }
  std::sort(chart.begin(), chart.end(), [](const ModeEntry& l, const ModeEntry& r) {
    if (l.cutoff_hz != r.cutoff_hz) return l.cutoff_hz < r.cutoff_hz;
    return l.index < r.index;
  });
  return chart;
}

ModeIndex dominant_mode(ModeAxis axis) { return axis == ModeAxis::width ? ModeIndex{1, 0} : ModeIndex{0, 1}; }

double corner_frequency(const FilterDesign& design) {
  require_valid(design);
  return rect_cutoff(dominant_mode(design.dominant_mode_axis), design.aperture, design.aperture_fill);
}

}  // namespace herd
