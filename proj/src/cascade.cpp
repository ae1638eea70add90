#include "herd/cascade.hpp"

#include <array>
#include <cmath>

#include "herd/constants.hpp"
#include "herd/errors.hpp"
#include "herd/leakage.hpp"
#include "herd/modes.hpp"
#include "herd/parallel.hpp"

namespace herd {

using constants::c0;
using constants::pi;

double TwoPort::max_singular_value() const {
  // Largest eigenvalue of S^H S.
  const double p = std::norm(s11) + std::norm(s21);
  const double r = std::norm(s12) + std::norm(s22);
  const Complex q = std::conj(s11) * s12 + std::conj(s21) * s22;
  const double half_diff = 0.5 * (p - r);
  const double lambda = 0.5 * (p + r) + std::sqrt(half_diff * half_diff + std::norm(q));
  return std::sqrt(lambda);
}

SParamTable::SParamTable(FrequencyGrid g, std::vector<TwoPort> e, Provenance p, std::string l)
    : grid(std::move(g)), entries(std::move(e)), provenance(p), label(std::move(l)) {
  if (entries.size() != grid.size()) throw DomainError("S-parameter table needs one entry per grid point");
}

namespace {

using TMatrix = std::array<Complex, 4>;  // row-major 2x2

TMatrix to_t(const TwoPort& s) {
  if (s.s21 == Complex{0.0, 0.0}) throw DomainError("cannot cascade a two-port with s21 = 0");
  const Complex inv = 1.0 / s.s21;
  const Complex det = s.s11 * s.s22 - s.s12 * s.s21;
  return {-det * inv, s.s11 * inv, -s.s22 * inv, inv};
}

TwoPort from_t(const TMatrix& t, double z_ref) {
  // Inverse of to_t: s21 = 1/T22, s11 = T12/T22, s22 = -T21/T22,
  // s12 = T11 - T12 T21 / T22.
  const Complex inv = 1.0 / t[3];
  TwoPort s;
  s.s21 = inv;
  s.s11 = t[1] * inv;
  s.s22 = -t[2] * inv;
  s.s12 = t[0] - t[1] * t[2] * inv;
  s.z_ref = z_ref;
  return s;
}

TMatrix multiply(const TMatrix& a, const TMatrix& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// 10 %-90 % rise of the logistic spans 2 ln 9 scale units.
double transition_scale(double corner, double width) { return width * corner / (2.0 * std::log(9.0)); }

}  // namespace

double stopband_section_db(double kappa, int apertures_per_section) {
  return -10.0 * apertures_per_section * std::log10(1.0 - kappa);
}

double section_power_transmission(const FilterDesign& design, double f, const CascadeOptions& opts) {
  require_valid(design);
  if (!(std::isfinite(f) && f > 0.0)) throw DomainError("frequency must be positive");
  if (!(opts.transition_width > 0.0)) throw DomainError("transition width must be positive");

  const double corner = corner_frequency(design);
  const int n = design.apertures_per_section;

  double below = 0.0;  // |F| = 1 at and above cutoff
  if (f < corner) {
    const double amp = evanescent_amplitude(design, f);
    below = std::exp(n * std::log1p(-amp * amp));
  }
  const double above = std::exp(n * std::log1p(-design.stopband_kappa));
  const double w = logistic((f - corner) / transition_scale(corner, opts.transition_width));
  return (1.0 - w) * below + w * above;
}

TwoPort section_two_port(const FilterDesign& design, double f, const CascadeOptions& opts) {
  double power = section_power_transmission(design, f, opts);
  const double phase = -2.0 * pi * f * design.section_pitch * design.coax_fill.index() / c0;
  const Complex rotation = std::polar(1.0, phase);

  TwoPort port;
  port.z_ref = opts.z_ref;
  if (opts.return_loss_floor_db) {
    const double rl = *opts.return_loss_floor_db;
    if (!(rl < 0.0)) throw DomainError("return loss floor must be negative (dB)");
    const double rho = std::pow(10.0, rl / 20.0);
    power *= 1.0 - rho * rho;
    port.s11 = Complex{0.0, rho} * rotation;
    port.s22 = port.s11;
  } else {
    port.s11 = port.s22 = Complex{0.0, 0.0};
  }
  port.s21 = std::sqrt(power) * rotation;
  port.s12 = port.s21;
  return port;
}

TwoPort cascade(std::span<const TwoPort> ports) {
  if (ports.empty()) throw DomainError("cannot cascade an empty list of two-ports");
  const double z_ref = ports.front().z_ref;
  TMatrix acc = to_t(ports.front());
  if (ports.size() == 1) return ports.front();
  for (std::size_t i = 1; i < ports.size(); ++i) {
    if (ports[i].z_ref != z_ref) throw DomainError("cascaded two-ports must share one reference impedance");
    acc = multiply(acc, to_t(ports[i]));
  }
  TwoPort out = from_t(acc, z_ref);
  // Reciprocal inputs give a reciprocal chain; keep s12 == s21 bit-exact.
  bool reciprocal = true;
  for (const auto& p : ports) reciprocal = reciprocal && p.is_reciprocal();
  if (reciprocal) out.s12 = out.s21;
  return out;
}

SParamTable filter_response(const FilterDesign& design, const FrequencyGrid& grid, const CascadeOptions& opts) {
  require_valid(design);
  auto entries = ordered_parallel_map(grid.size(), [&](std::size_t i) {
    const TwoPort section = section_two_port(design, grid[i], opts);
    const std::vector<TwoPort> chain(static_cast<std::size_t>(design.sections), section);
    return cascade(chain);
  });
  return SParamTable(grid, std::move(entries), Provenance::model, "model");
}

std::vector<std::pair<int, double>> attenuation_vs_sections(const FilterDesign& design, double f, int max_sections,
                                                            const CascadeOptions& opts) {
  if (max_sections < 1) throw DomainError("max_sections must be >= 1");
  require_valid(design);
  const TwoPort section = section_two_port(design, f, opts);
  std::vector<std::pair<int, double>> out;
  out.reserve(static_cast<std::size_t>(max_sections));
  std::vector<TwoPort> chain;
  for (int k = 1; k <= max_sections; ++k) {
    chain.push_back(section);
    out.emplace_back(k, insertion_loss_db(cascade(chain)));
  }
  return out;
}

double calibrate_kappa(const FilterDesign& design, double f_ref, double target_total_db) {
  if (!(f_ref > corner_frequency(design)))
    throw DomainError("kappa calibration frequency must lie above the aperture corner frequency");
  if (!(target_total_db >= 0.0) || !std::isfinite(target_total_db))
    throw DomainError("target attenuation must be non-negative and finite");
  const int total = design.sections * design.apertures_per_section;
  if (total < 1) throw DomainError("design needs at least one aperture");
  return -std::expm1(-target_total_db / (10.0 * total) * std::log(10.0));
}

double insertion_loss_db(const TwoPort& port) { return -20.0 * std::log10(std::abs(port.s21)); }

}  // namespace herd
