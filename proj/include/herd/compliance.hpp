#pragma once

#include <optional>
#include <string>
#include <vector>

#include "herd/cascade.hpp"

namespace herd {

/// Closed frequency interval [low, high] in Hz.
struct Band {
  double low = 0.0;
  double high = 0.0;

  bool contains(double f) const { return f >= low && f <= high; }
  friend bool operator==(const Band&, const Band&) = default;
};

struct BandMetric {
  Band band;
  std::size_t points = 0;
  double max_insertion_loss_db = 0.0;
  double min_attenuation_db = 0.0;
  double max_ripple_db = 0.0;
  /// max of 20 log10 |s11|; -inf for a perfectly matched table.
  double worst_return_loss_db = 0.0;
};

/// Metrics over the grid points inside `band`.  Throws DomainError when the
/// band is malformed or holds no points.
BandMetric band_metrics(const SParamTable& table, Band band);

enum class ClaimKind { max_il, min_att, max_ripple };

struct Claim {
  Band band;
  ClaimKind kind = ClaimKind::max_il;
  double threshold_db = 0.0;
};

struct ClaimResult {
  std::string description;
  Claim claim;
  double observed_db = 0.0;
  bool pass = false;
  /// Set when the claim could not be evaluated (e.g. no data in the band).
  std::optional<std::string> error;
};

struct ComplianceReport {
  std::vector<ClaimResult> rows;

  bool pass() const;
};

ComplianceReport check_claims(const SParamTable& table, const std::vector<Claim>& claims);

std::string describe(const Claim& claim);
std::string to_string(ClaimKind kind);

/// Named claim sets: "default" (IL <= 0.15 dB to 10 GHz, >= 60 dB from 70 to
/// 145 GHz, ripple <= 0.1 dB over 4-8 GHz) and "strict12" (IL band to 12 GHz).
/// Throws DomainError for an unknown name.
std::vector<Claim> claims_profile(const std::string& name);

}  // namespace herd
