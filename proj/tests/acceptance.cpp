// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "cli.hpp"
#include "herd/cascade.hpp"
#include "herd/compliance.hpp"
#include "herd/errors.hpp"
#include "herd/leakage.hpp"
#include "herd/modes.hpp"
#include "herd/synthesis.hpp"
#include "herd/touchstone.hpp"
#include "oracle.hpp"

using namespace herd;
namespace frozen = herd::oracle::frozen;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("%s [%2d] %s: %s (%.1f ms)\n", o.pass ? "PASS" : "FAIL", n, title.c_str(), o.detail.c_str(), ms);
}

std::string num(double v, int digits = 6) {
  std::ostringstream s;
  s.precision(digits);
  s << v;
  return s.str();
}

bool within(double v, double centre, double tol) { return std::abs(v - centre) <= tol; }

int run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  return cli::run(args, out, err);
}

}  // namespace

int main() {
  criterion(1, "impedance ratio for 50 ohm air line", [] {
    const double r = coax_ratio_for_impedance(50.0, Material::air());
    const bool ok = r >= 2.301 && r <= 2.304 && oracle::rel_err(r, frozen::ratio_for_50_ohm) <= 1e-12;
    return Outcome{ok, "ratio " + num(r, 12) + " in [2.301, 2.304]"};
  });

  criterion(2, "inner radius for 50 ohm single-mode to 10 GHz", [] {
    const auto g = solve_inner_radius(50.0, 10e9, Material::air());
    const bool ok = within(g.r_inner, 2.89e-3, 0.01e-3) && oracle::rel_err(g.r_inner, frozen::r_inner_50ohm_10ghz) <= 1e-12 &&
                    oracle::rel_err(coax_first_higher_mode_cutoff(g, Material::air()), 10e9) <= 1e-12;
    return Outcome{ok, "r_i " + num(g.r_inner * 1e3, 8) + " mm, expected 2.89 +/- 0.01 mm"};
  });

  criterion(3, "mismatch loss at -20 dB return loss", [] {
    const double m = mismatch_loss_db(-20.0);
    const bool ok = within(m, 0.0436, 0.0005) && oracle::rel_err(m, frozen::mismatch_20db) <= 1e-12;
    return Outcome{ok, num(m, 8) + " dB, expected 0.0436 +/- 0.0005 dB"};
  });

  criterion(4, "prototype in-band loss at 10 GHz", [] {
    const FilterDesign p = prototype_design();
    const double il = inband_transmission(p, 10e9).insertion_loss_db;
    const double ref = static_cast<double>(oracle::inband_loss_db(p.aperture.width_a, p.aperture.depth_d,
                                                                  p.aperture_fill.eps_r, 10e9, p.total_apertures()));
    const bool ok = within(il, 0.127, 0.005) && il <= 0.15 && oracle::rel_err(il, ref) <= 1e-9;
    return Outcome{ok, num(il, 8) + " dB, oracle " + num(ref, 8) + " dB, bound 0.15 dB"};
  });

  criterion(5, "depth inversion for a 0.127 dB budget", [] {
    FilterDesign p = prototype_design();
    const double d = min_depth_for_budget(p, 10e9, 0.127);
    p.aperture.depth_d = d;
    const double back = inband_transmission(p, 10e9).insertion_loss_db;
    const bool ok = within(d, 4.85e-3, 0.02e-3) && back <= 0.127;
    return Outcome{ok, "d " + num(d * 1e3, 8) + " mm, expected 4.85 +/- 0.02 mm; IL at d " + num(back, 10) + " dB"};
  });

  criterion(6, "stopband calibration and 70-145 GHz attenuation", [] {
    const FilterDesign p = prototype_design();
    const double kappa = calibrate_kappa(p, 70e9, 60.0);
    const auto t0 = std::chrono::steady_clock::now();
    const auto table = filter_response(p, FrequencyGrid::linear(70e9, 145e9, 1000));
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double worst = band_metrics(table, {70e9, 145e9}).min_attenuation_db;
    const bool ok = within(kappa, 0.3505, 0.001) && worst >= 60.0 && s < 1.0;
    return Outcome{ok, "kappa " + num(kappa, 8) + ", min attenuation " + num(worst, 8) + " dB over 1000 points in " +
                           num(s * 1e3, 3) + " ms"};
  });

  criterion(7, "attenuation linear in section count at 40, 60, 70 GHz", [] {
    double worst = 0.0;
    for (double f : {40e9, 60e9, 70e9}) {
      const auto rows = attenuation_vs_sections(prototype_design(), f, 12);
      const double step = rows[1].second - rows[0].second;
      for (std::size_t k = 1; k < rows.size(); ++k)
        worst = std::max(worst, std::abs((rows[k].second - rows[k - 1].second) - step));
    }
    return Outcome{worst <= 1e-9, "largest step deviation " + num(worst, 3) + " dB"};
  });

  criterion(8, "corner frequency value and scaling properties", [] {
    const FilterDesign p = prototype_design();
    const double fc = corner_frequency(p);
    const double ref = static_cast<double>(oracle::c0 / (2.0L * p.aperture.width_a * std::sqrt(2.2L)));
    bool ok = within(fc, 25.26e9, 0.05e9) && oracle::rel_err(fc, ref) <= 1e-12;

    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> dim(0.5e-3, 20e-3), eps(1.0, 12.0), scale(0.1, 10.0);
    double worst = 0.0;
    int trials = 0;
    for (; trials < 1000; ++trials) {
      FilterDesign d = p;
      d.aperture.width_a = dim(rng);
      d.aperture.height_b = d.aperture.width_a * (0.2 + 0.79 * std::uniform_real_distribution<double>(0, 1)(rng));
      d.aperture_fill.eps_r = eps(rng);
      const double base = corner_frequency(d);
      const double closed = static_cast<double>(oracle::rect_cutoff_hz(1, 0, d.aperture.width_a, d.aperture.height_b,
                                                                        d.aperture_fill.eps_r));
      worst = std::max(worst, oracle::rel_err(base, closed));

      FilterDesign tall = d;
      tall.aperture.height_b = d.aperture.width_a * (0.2 + 0.79 * std::uniform_real_distribution<double>(0, 1)(rng));
      ok = ok && corner_frequency(tall) == base;

      const double k = scale(rng);
      FilterDesign wide = d;
      wide.aperture.width_a *= k;
      worst = std::max(worst, oracle::rel_err(corner_frequency(wide) * k, base));

      const double q = 1.0 + k;
      FilterDesign dense = d;
      dense.aperture_fill.eps_r *= q;
      worst = std::max(worst, oracle::rel_err(corner_frequency(dense) * std::sqrt(q), base));
    }
    ok = ok && worst <= 1e-9;
    return Outcome{ok, "corner " + num(fc / 1e9, 8) + " GHz; " + std::to_string(trials) +
                           " geometries, worst relative error " + num(worst, 3)};
  });

  criterion(9, "Touchstone round trip over formats and units", [] {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> count(1, 64);
    std::uniform_real_distribution<double> start(1.0, 1e11), step(1e-3, 1e9);
    const TouchstoneFormat formats[] = {TouchstoneFormat::ri, TouchstoneFormat::ma, TouchstoneFormat::db};
    const FrequencyUnit units[] = {FrequencyUnit::hz, FrequencyUnit::khz, FrequencyUnit::mhz, FrequencyUnit::ghz};
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      std::vector<double> f;
      std::vector<TwoPort> e;
      double x = start(rng);
      for (int k = count(rng); k > 0; --k) {
        f.push_back(x);
        x += step(rng) * (1 + x * 1e-6);
        TwoPort p;
        p.s11 = oracle::random_complex(rng, 1e-8, 1.0);
        p.s21 = oracle::random_complex(rng, 1e-8, 1.0);
        p.s12 = oracle::random_complex(rng, 1e-8, 1.0);
        p.s22 = oracle::random_complex(rng, 1e-8, 1.0);
        e.push_back(p);
      }
      const SParamTable t0(FrequencyGrid(f), e, Provenance::measured, "rt");
      const auto fmt = formats[i % 3];
      const auto unit = units[(i / 3) % 4];
      const auto t1 = parse_touchstone(write_touchstone(t0, fmt, unit));
      const auto t2 = parse_touchstone(write_touchstone(t1, fmt, unit));
      if (t1.size() != t0.size() || t2.size() != t0.size()) return Outcome{false, "row count changed"};
      for (std::size_t j = 0; j < t0.size(); ++j) {
        worst = std::max({worst, oracle::rel_err(t1.grid[j], t0.grid[j]), oracle::rel_err(t2.grid[j], t1.grid[j])});
        const TwoPort& a = t0.entries[j];
        const TwoPort& b = t1.entries[j];
        const TwoPort& c = t2.entries[j];
        for (auto [u, v, w] : {std::tuple{a.s11, b.s11, c.s11}, std::tuple{a.s21, b.s21, c.s21},
                               std::tuple{a.s12, b.s12, c.s12}, std::tuple{a.s22, b.s22, c.s22}}) {
          worst = std::max({worst, std::abs(v - u) / std::abs(u), std::abs(w - v) / std::abs(v)});
        }
      }
    }
    return Outcome{worst <= 1e-9, "1000 tables, worst relative error " + num(worst, 3)};
  });

  criterion(10, "synthesis closure and the claims spec", [] {
    DesignSpec claims;
    claims.f_passband_top = 10e9;
    claims.passband_il_budget_db = 0.15;
    claims.f_stopband_start = 25.3e9;
    claims.stopband_min_attenuation_db = 60.0;
    claims.aperture_fill = Material::ptfe();
    const FilterDesign d = synthesize(claims).design;
    bool ok = within(d.aperture.width_a, 4.0e-3, 0.1e-3) && d.sections == 4 && d.aperture.depth_d >= 4.5e-3 &&
              d.aperture.depth_d <= 5.2e-3;

    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> ftop(1e9, 20e9), ratio(2.5, 6.0), budget(0.02, 1.0), att(10.0, 120.0),
        z0(35.0, 75.0), eps(1.0, 4.0);
    std::uniform_int_distribution<int> per(2, 12);
    int feasible = 0;
    double worst = std::numeric_limits<double>::infinity();
    for (int draws = 0; feasible < 50 && draws < 10000; ++draws) {
      DesignSpec s;
      s.z0 = z0(rng);
      s.f_passband_top = ftop(rng);
      s.f_stopband_start = s.f_passband_top * ratio(rng);
      s.passband_il_budget_db = budget(rng);
      s.stopband_min_attenuation_db = att(rng);
      s.aperture_fill = {eps(rng), 1.0, 0.0};
      s.apertures_per_section = per(rng);
      SynthesisReport r;
      try {
        r = synthesize(s);
      } catch (const InfeasibleError&) {
        continue;
      }
      ++feasible;
      const auto check = verify(r.design, s);
      worst = std::min({worst, check.margin_passband_db, check.margin_stopband_db});
    }
    ok = ok && feasible == 50 && worst >= 0.0;
    return Outcome{ok, "a " + num(d.aperture.width_a * 1e3, 6) + " mm, " + std::to_string(d.sections) + " sections, d " +
                           num(d.aperture.depth_d * 1e3, 6) + " mm; " + std::to_string(feasible) +
                           " random specs, smallest margin " + num(worst, 3) + " dB"};
  });

  criterion(11, "herd analyze exit codes for the prototype", [] {
    const int four = run_cli({"analyze", "--prototype", "--claims", "default"});
    const int two = run_cli({"analyze", "--prototype", "--sections", "2", "--claims", "default"});
    bool ok = four == 0 && two == 1;
    std::string detail = "in-process " + std::to_string(four) + "/" + std::to_string(two);
#ifdef HERD_BINARY
    const std::string bin = HERD_BINARY;
    const int b4 = WEXITSTATUS(std::system((bin + " analyze --prototype --claims default > /dev/null").c_str()));
    const int b2 =
        WEXITSTATUS(std::system((bin + " analyze --prototype --sections 2 --claims default > /dev/null").c_str()));
    ok = ok && b4 == 0 && b2 == 1;
    detail += ", binary " + std::to_string(b4) + "/" + std::to_string(b2);
#endif
    return Outcome{ok, "exit codes " + detail + " (sections 4/2), expected 0/1"};
  });

  std::printf("%s: %d of 11 criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
