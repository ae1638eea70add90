#pragma once

#include "herd/core_model.hpp"

namespace herd {

/// Performance targets for inverse design.
struct DesignSpec {
  double z0 = 50.0;                    // ohm
  double f_passband_top = 0.0;         // Hz; also the single-mode requirement
  double passband_il_budget_db = 0.0;  // dB, > 0
  double f_stopband_start = 0.0;       // Hz
  double stopband_min_attenuation_db = 0.0;
  Material aperture_fill;
  Material coax_fill;
  int apertures_per_section = FilterDesign::default_apertures_per_section;

  friend bool operator==(const DesignSpec&, const DesignSpec&) = default;
};

struct SynthesisOptions {
  /// Single-mode limit placed at f_passband_top * margin.
  double single_mode_margin = 1.0;
  /// Aperture height as a multiple of its width (prototype: 5/4).
  double height_to_width = 1.25;
  /// Number of flat faces on the outer body; bounds the aperture width.
  int face_count = 8;
  double stopband_kappa = FilterDesign::default_stopband_kappa;
  double section_pitch = FilterDesign::default_section_pitch;
};

struct SynthesisReport {
  FilterDesign design;
  double margin_passband_db = 0.0;
  double margin_stopband_db = 0.0;
  double total_length = 0.0;  // m
};

/// Gap-to-frequency threshold for Cooper-pair breaking, 2 Delta / h in Hz.
double pair_breaking_frequency(double gap_energy_ev);

/// Largest aperture width that fits on one face of a regular polygonal body
/// circumscribing the coax: 2 r_o tan(pi / faces).
double max_aperture_width(double r_outer, int face_count);

/// Throws DomainError for non-positive or non-finite targets and
/// InfeasibleError when the stopband does not lie above the passband or the
/// required aperture does not fit on the body.
SynthesisReport synthesize(const DesignSpec& spec, const SynthesisOptions& opts = {});

/// Forward-model margins of `design` against `spec`.  Negative margins are
/// reported, not thrown.
SynthesisReport verify(const FilterDesign& design, const DesignSpec& spec);

}  // namespace herd
