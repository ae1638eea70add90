#pragma once

#include <vector>

#include "herd/core_model.hpp"

namespace herd {

/// In-band loss at one frequency.  total_transmission is
/// (1 - per_aperture_leak_power)^A with A the total aperture count.
struct InbandLossBreakdown {
  double frequency = 0.0;
  double per_aperture_leak_power = 0.0;  // |F|^2
  double total_transmission = 1.0;
  double insertion_loss_db = 0.0;
};

/// Field amplitude F = exp(-gamma d) left after tunneling through one aperture
/// of depth d on the dominant mode.  Throws DomainError at or above the
/// corner frequency, where the evanescent model no longer applies.
double evanescent_amplitude(const FilterDesign& design, double f);

InbandLossBreakdown inband_transmission(const FilterDesign& design, double f);

/// Insertion loss implied by a reflection of `return_loss_db` (< 0).
double mismatch_loss_db(double return_loss_db);

/// Smallest aperture depth for which the in-band loss at `f` stays within
/// `budget_db`.  The depth field of `design` is ignored.
double min_depth_for_budget(const FilterDesign& design, double f, double budget_db);

/// Pointwise inband_transmission.  Throws DomainError naming the first grid
/// frequency at or above the corner.
std::vector<InbandLossBreakdown> inband_loss_curve(const FilterDesign& design, const FrequencyGrid& grid);

}  // namespace herd
