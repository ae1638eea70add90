#include "herd/leakage.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "herd/errors.hpp"
#include "herd/modes.hpp"
#include "herd/parallel.hpp"

namespace herd {

namespace {

// Attenuation constant of the dominant mode; throws when not evanescent.
double dominant_attenuation(const FilterDesign& design, double f) {
  require_valid(design);
  if (!(std::isfinite(f) && f > 0.0)) throw DomainError("frequency must be positive");
  const double corner = corner_frequency(design);
  if (!(f < corner)) {
    std::ostringstream msg;
    msg << "frequency " << f << " Hz is at or above the aperture corner frequency " << corner
        << " Hz; the evanescent leakage model does not apply";
    throw DomainError(msg.str());
  }
  return rect_gamma(dominant_mode(design.dominant_mode_axis), design.aperture, design.aperture_fill, f).real();
}

double loss_db_from_leak(double leak_power, int apertures) {
  // -10 log10((1 - p)^A) without forming the power, which underflows nothing
  // but loses digits for small p.
  return -10.0 * apertures * std::log1p(-leak_power) / std::log(10.0);
}

}  // namespace

double evanescent_amplitude(const FilterDesign& design, double f) {
  return std::exp(-dominant_attenuation(design, f) * design.aperture.depth_d);
}

InbandLossBreakdown inband_transmission(const FilterDesign& design, double f) {
  const double amp = evanescent_amplitude(design, f);
  const int count = design.total_apertures();
  InbandLossBreakdown out;
  out.frequency = f;
  out.per_aperture_leak_power = amp * amp;
  out.total_transmission = std::exp(count * std::log1p(-out.per_aperture_leak_power));
  out.insertion_loss_db = loss_db_from_leak(out.per_aperture_leak_power, count);
  return out;
}

double mismatch_loss_db(double return_loss_db) {
  if (!(return_loss_db < 0.0) || std::isnan(return_loss_db))
    throw DomainError("return loss must be negative (in dB)");
  return -10.0 * std::log10(1.0 - std::pow(10.0, return_loss_db / 10.0));
}

double min_depth_for_budget(const FilterDesign& design, double f, double budget_db) {
  if (!(budget_db > 0.0) || std::isnan(budget_db)) throw DomainError("loss budget must be positive");
  const double gamma = dominant_attenuation(design, f);
  if (std::isinf(budget_db)) return 0.0;

  const int count = design.total_apertures();
  // per-aperture leak power allowed: 1 - 10^(-budget / (10 A))
  const double leak_allowed = -std::expm1(-budget_db / (10.0 * count) * std::log(10.0));
  const double amp_allowed = std::sqrt(leak_allowed);
  if (!(amp_allowed > 0.0)) throw InfeasibleError("loss budget too small to resolve an aperture depth");
  if (amp_allowed >= 1.0) return 0.0;

  double depth = -std::log(amp_allowed) / gamma;
  // Closed form can land an ulp on the wrong side of the budget.
  for (int i = 0; i < 64; ++i) {
    const double amp = std::exp(-gamma * depth);
    if (loss_db_from_leak(amp * amp, count) <= budget_db) break;
    depth = std::nextafter(depth, std::numeric_limits<double>::infinity());
  }
  return depth;
}

std::vector<InbandLossBreakdown> inband_loss_curve(const FilterDesign& design, const FrequencyGrid& grid) {
  require_valid(design);
  const double corner = corner_frequency(design);
  for (double f : grid) {
    if (!(f < corner)) {
      std::ostringstream msg;
      msg << "grid frequency " << f << " Hz is at or above the corner frequency " << corner << " Hz";
      throw DomainError(msg.str());
    }
  }
  return ordered_parallel_map(grid.size(), [&](std::size_t i) { return inband_transmission(design, grid[i]); });
}

}  // namespace herd
