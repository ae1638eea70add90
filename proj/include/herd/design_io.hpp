#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "herd/core_model.hpp"
#include "herd/synthesis.hpp"

namespace herd {

// Flat `key = value` text, one pair per line, `#` starts a comment.  Unknown or
// repeated keys are errors; keys without a default must be present.

/// Design keys: a_m, b_m, d_m, r_inner_m, r_outer_m, coax_eps_r, aperture_eps_r,
/// apertures_per_section, sections, section_pitch_m, stopband_kappa,
/// dominant_mode_axis.  The result is validated; violations become ParseError.
FilterDesign parse_design(std::string_view text);
FilterDesign read_design_file(const std::string& path);
std::string write_design(const FilterDesign& design);

/// Spec keys: z0_ohm, f_passband_top_hz, passband_il_budget_db,
/// f_stopband_start_hz, stopband_min_attenuation_db, aperture_eps_r,
/// coax_eps_r, apertures_per_section.
DesignSpec parse_design_spec(std::string_view text);
DesignSpec read_spec_file(const std::string& path);
std::string write_design_spec(const DesignSpec& spec);

}  // namespace herd
