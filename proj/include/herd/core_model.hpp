#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace herd {

struct Material {
  double eps_r = 1.0;
  double mu_r = 1.0;
  double loss_tangent = 0.0;

  /// sqrt(eps_r * mu_r), the refractive index of the fill.
  double index() const;

  static Material air() { return {}; }
  static Material ptfe() { return {2.2, 1.0, 0.0}; }

  friend bool operator==(const Material&, const Material&) = default;
};

struct CoaxGeometry {
  double r_inner = 0.0;  // m
  double r_outer = 0.0;  // m

  friend bool operator==(const CoaxGeometry&, const CoaxGeometry&) = default;
};

/// Hollow-waveguide leakage aperture.  Width a is the radial dimension, depth d
/// runs through the outer conductor.
struct RectAperture {
  double width_a = 0.0;   // m
  double height_b = 0.0;  // m
  double depth_d = 0.0;   // m

  friend bool operator==(const RectAperture&, const RectAperture&) = default;
};

enum class ModeAxis { width, height };

struct FilterDesign {
  static constexpr int default_apertures_per_section = 8;
  static constexpr double default_section_pitch = 0.010;  // m
  static constexpr double default_stopband_kappa = 0.351;

  CoaxGeometry coax;
  Material coax_fill;
  RectAperture aperture;
  Material aperture_fill;
  int apertures_per_section = default_apertures_per_section;
  int sections = 1;
  double section_pitch = default_section_pitch;
  double stopband_kappa = default_stopband_kappa;
  ModeAxis dominant_mode_axis = ModeAxis::width;

  int total_apertures() const { return apertures_per_section * sections; }

  friend bool operator==(const FilterDesign&, const FilterDesign&) = default;
};

/// Strictly increasing list of positive frequencies in Hz.
class FrequencyGrid {
 public:
  /// Throws DomainError unless `points` is non-empty, finite, positive and
  /// strictly increasing.
  explicit FrequencyGrid(std::vector<double> points);

  /// `count` points from `start` to `stop`; the last point is exactly `stop`.
  static FrequencyGrid linear(double start, double stop, std::size_t count);
  static FrequencyGrid logarithmic(double start, double stop, std::size_t count);

  const std::vector<double>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  double operator[](std::size_t i) const { return points_[i]; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  friend bool operator==(const FrequencyGrid&, const FrequencyGrid&) = default;

 private:
  std::vector<double> points_;
};

/// The four-section PTFE-loaded prototype (a = 4 mm, b = 5 mm, d = 4.85 mm,
/// r_o = 3.65 mm, r_i = 1.59 mm, eight apertures per section).
FilterDesign prototype_design();

/// Empty iff every field invariant holds.  Each entry names the field and the
/// violated constraint.
std::vector<std::string> validate(const FilterDesign& design);
std::vector<std::string> validate(const Material& material, const std::string& field);

/// Throw DomainError with the first violation, if any.
void require_valid(const FilterDesign& design);
void require_valid(const CoaxGeometry& geom);
void require_valid(const RectAperture& aperture);
void require_valid(const Material& material);

std::string to_string(ModeAxis axis);

}  // namespace herd
