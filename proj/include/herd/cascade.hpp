#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "herd/core_model.hpp"

namespace herd {

using Complex = std::complex<double>;

struct TwoPort {
  Complex s11{0.0, 0.0};
  Complex s12{1.0, 0.0};
  Complex s21{1.0, 0.0};
  Complex s22{0.0, 0.0};
  double z_ref = 50.0;  // ohm

  /// Zero-length matched through line.
  static TwoPort identity(double z_ref = 50.0) { return {{0, 0}, {1, 0}, {1, 0}, {0, 0}, z_ref}; }

  /// Largest singular value of the scattering matrix.
  double max_singular_value() const;
  bool is_passive(double tol = 1e-9) const { return max_singular_value() <= 1.0 + tol; }
  bool is_reciprocal() const { return s12 == s21; }
};

enum class Provenance { model, measured };

struct SParamTable {
  FrequencyGrid grid{std::vector<double>{1.0}};
  std::vector<TwoPort> entries;
  Provenance provenance = Provenance::model;
  std::string label;
  /// Phases carry no information (magnitude-only measurement).
  bool magnitude_only = false;

  SParamTable(FrequencyGrid g, std::vector<TwoPort> e, Provenance p, std::string l);

  std::size_t size() const noexcept { return entries.size(); }
};

/// Knobs of the section model that are not part of the filter geometry.
struct CascadeOptions {
  /// 10-90 % width of the logistic cutoff transition, as a fraction of the
  /// corner frequency.
  double transition_width = 0.10;
  /// When set, every section reflects |s11| = 10^(rl/20) (rl < 0 dB).
  std::optional<double> return_loss_floor_db;
  double z_ref = 50.0;
};

/// Per-section power transmission |s21|^2 of the matched model: evanescent
/// leakage below the corner, a constant drain of stopband_kappa per aperture
/// above it, logistically blended across the corner.
double section_power_transmission(const FilterDesign& design, double f, const CascadeOptions& opts = {});

TwoPort section_two_port(const FilterDesign& design, double f, const CascadeOptions& opts = {});

/// Chain the ports in order (port 2 of ports[i] feeds port 1 of ports[i+1]).
/// Throws DomainError on an empty list, mismatched reference impedances, or a
/// port with s21 == 0 (no transfer matrix exists).
TwoPort cascade(std::span<const TwoPort> ports);

SParamTable filter_response(const FilterDesign& design, const FrequencyGrid& grid, const CascadeOptions& opts = {});

/// (sections, attenuation dB) for 1..max_sections copies of the section at f.
std::vector<std::pair<int, double>> attenuation_vs_sections(const FilterDesign& design, double f, int max_sections,
                                                            const CascadeOptions& opts = {});

/// Per-aperture drain that gives exactly `target_total_db` over all sections.
double calibrate_kappa(const FilterDesign& design, double f_ref, double target_total_db);

/// Section attenuation in the stopband for a given drain fraction.
double stopband_section_db(double kappa, int apertures_per_section);

/// -20 log10 |s21|
double insertion_loss_db(const TwoPort& port);

}  // namespace herd
