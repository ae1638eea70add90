#pragma once

#include <numbers>

namespace herd {

// All internal quantities are SI: Hz, m, ohm, Np/m.  Decibels only appear at
// presentation boundaries.
namespace constants {

inline constexpr double c0 = 299'792'458.0;           // m/s
inline constexpr double eta0 = 376.730313668;          // ohm, vacuum wave impedance
inline constexpr double planck_h = 6.62607015e-34;     // J s
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double pi = std::numbers::pi;

}  // namespace constants

namespace literals {

constexpr double operator""_Hz(long double v) { return static_cast<double>(v); }
constexpr double operator""_kHz(long double v) { return static_cast<double>(v) * 1e3; }
constexpr double operator""_MHz(long double v) { return static_cast<double>(v) * 1e6; }
constexpr double operator""_GHz(long double v) { return static_cast<double>(v) * 1e9; }
constexpr double operator""_GHz(unsigned long long v) { return static_cast<double>(v) * 1e9; }
constexpr double operator""_m(long double v) { return static_cast<double>(v); }
constexpr double operator""_mm(long double v) { return static_cast<double>(v) * 1e-3; }
constexpr double operator""_mm(unsigned long long v) { return static_cast<double>(v) * 1e-3; }

}  // namespace literals

}  // namespace herd
