#pragma once
#ifndef RFVLC_UNITS_HPP
#define RFVLC_UNITS_HPP

#include <cmath>
#include <numbers>

namespace rfvlc {

/// Power ratio in dB to linear scale.
inline double db_to_linear(double x_db) { return std::pow(10.0, x_db / 10.0); }

inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

inline double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

inline double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

}  // namespace rfvlc

#endif  // RFVLC_UNITS_HPP
