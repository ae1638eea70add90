#pragma once

#include <complex>
#include <vector>

#include "herd/core_model.hpp"

namespace herd {

/// TE mode indices: m half-waves along the aperture width, n along the height.
struct ModeIndex {
  int m = 0;
  int n = 0;

  friend auto operator<=>(const ModeIndex&, const ModeIndex&) = default;
};

struct ModeEntry {
  ModeIndex index;
  double cutoff_hz = 0.0;
};

/// Z0 = (eta0 / 2pi) sqrt(mu_r / eps_r) ln(r_o / r_i).
double coax_char_impedance(const CoaxGeometry& geom, const Material& fill);

/// Outer-to-inner radius ratio giving impedance `z0`.  Inverse of
/// coax_char_impedance.
double coax_ratio_for_impedance(double z0, const Material& fill);

/// Onset of the first coaxial higher-order mode, from lambda = pi (r_o + r_i).
/// This is the usual approximation, not a Bessel-root solution.
double coax_first_higher_mode_cutoff(const CoaxGeometry& geom, const Material& fill);

/// Radii meeting both `z0` and a single-mode limit of `f_single_mode`.
CoaxGeometry solve_inner_radius(double z0, double f_single_mode, const Material& fill);

/// Cutoff frequency of TE_mn in a rectangular aperture.  Depth is ignored.
double rect_cutoff(ModeIndex index, const RectAperture& ap, const Material& fill);

/// Propagation constant of TE_mn at `f`.  Below cutoff the result is real
/// (attenuation, Np/m), above cutoff purely imaginary (phase, rad/m), and 0
/// exactly at cutoff.
std::complex<double> rect_gamma(ModeIndex index, const RectAperture& ap, const Material& fill, double f);

/// All TE modes with cutoff <= f_max, ascending by cutoff (ties by index).
std::vector<ModeEntry> mode_chart(const RectAperture& ap, const Material& fill, double f_max);

/// The mode that sets the stopband corner: TE10 for ModeAxis::width, TE01 for
/// ModeAxis::height.
ModeIndex dominant_mode(ModeAxis axis);

/// Cutoff of the dominant aperture mode, i.e. the onset of stopband leakage.
double corner_frequency(const FilterDesign& design);

}  // namespace herd
