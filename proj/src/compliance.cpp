#include "herd/compliance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "herd/errors.hpp"
#include "herd/format.hpp"

namespace herd {

namespace {

std::string ghz(double hz) { return format_number(hz / 1e9, 6); }

std::string band_text(Band b) { return "[" + ghz(b.low) + ", " + ghz(b.high) + "] GHz"; }

}  // namespace

BandMetric band_metrics(const SParamTable& table, Band band) {
  if (!(band.low < band.high) || std::isnan(band.low) || std::isnan(band.high))
    throw DomainError("band requires f_low < f_high");

  BandMetric m;
  m.band = band;
  double il_max = -std::numeric_limits<double>::infinity();
  double il_min = std::numeric_limits<double>::infinity();
  double rl_max = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!band.contains(table.grid[i])) continue;
    const auto& p = table.entries[i];
    const double il = insertion_loss_db(p);
    il_max = std::max(il_max, il);
    il_min = std::min(il_min, il);
    rl_max = std::max(rl_max, 20.0 * std::log10(std::abs(p.s11)));
    ++m.points;
  }
  if (m.points == 0) throw DomainError("no data points in band " + band_text(band));
  m.max_insertion_loss_db = il_max;
  m.min_attenuation_db = il_min;
  m.max_ripple_db = il_max - il_min;
  m.worst_return_loss_db = rl_max;
  return m;
}

bool ComplianceReport::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const ClaimResult& r) { return r.pass; });
}

std::string to_string(ClaimKind kind) {
  switch (kind) {
    case ClaimKind::max_il: return "MAX_IL";
    case ClaimKind::min_att: return "MIN_ATT";
    case ClaimKind::max_ripple: return "MAX_RIPPLE";
  }
  return "?";
}

std::string describe(const Claim& c) {
  std::ostringstream s;
  switch (c.kind) {
    case ClaimKind::max_il: s << "insertion loss <= "; break;
    case ClaimKind::min_att: s << "attenuation >= "; break;
    case ClaimKind::max_ripple: s << "ripple <= "; break;
  }
  s << format_number(c.threshold_db, 6) << " dB over " << band_text(c.band);
  return s.str();
}

ComplianceReport check_claims(const SParamTable& table, const std::vector<Claim>& claims) {
  ComplianceReport report;
  for (const auto& claim : claims) {
    ClaimResult row;
    row.description = describe(claim);
    row.claim = claim;
    try {
      const BandMetric m = band_metrics(table, claim.band);
      switch (claim.kind) {
        case ClaimKind::max_il:
          row.observed_db = m.max_insertion_loss_db;
          row.pass = row.observed_db <= claim.threshold_db;
          break;
        case ClaimKind::min_att:
          row.observed_db = m.min_attenuation_db;
          row.pass = row.observed_db >= claim.threshold_db;
          break;
        case ClaimKind::max_ripple:
          row.observed_db = m.max_ripple_db;
          row.pass = row.observed_db <= claim.threshold_db;
          break;
      }
    } catch (const DomainError& e) {
      row.observed_db = std::numeric_limits<double>::quiet_NaN();
      row.pass = false;
      row.error = e.what();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::vector<Claim> claims_profile(const std::string& name) {
  const double il_edge = name == "strict12" ? 12e9 : 10e9;
  if (name != "default" && name != "strict12") throw DomainError("unknown claims profile '" + name + "'");
  return {
      {{0.0, il_edge}, ClaimKind::max_il, 0.15},
      {{70e9, 145e9}, ClaimKind::min_att, 60.0},
      {{4e9, 8e9}, ClaimKind::max_ripple, 0.1},
  };
}

}  // namespace herd
