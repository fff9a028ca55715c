#pragma once
#ifndef RFVLC_VLC_CHANNEL_HPP
#define RFVLC_VLC_CHANNEL_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rfvlc/scenario.hpp"

// Line-of-sight Lambertian VLC hop for a user placed uniformly over the cell
// footprint (radial density 2r/r_e^2).  The receiver faces straight up, so the
// irradiance and incidence angles coincide and the concentrator gain is the
// constant in-FOV branch for every in-cell user.
//
// The N access points are treated as i.i.d. copies of the single-cell law and
// the user attaches to the best one.  A real user's distances to N fixed LEDs
// are geometrically coupled; that correlation is deliberately not modelled.

namespace rfvlc {

/// Channel gain at radial distance r from the point below the LED.
inline double vlc_gain_at(double r, const VlcModel& m) {
  const auto& d = m.derived;
  if (!(r >= 0.0 && r <= d.cell_radius_m)) throw std::domain_error("vlc_gain_at: r outside [0, r_e]");
  const double L = m.geometry.height_m;
  return d.im_const / std::pow(r * r + L * L, 0.5 * (d.lambertian_order + 3.0));
}

inline double vlc_snr_at(double r, const VlcModel& m) {
  const double gain = vlc_gain_at(r, m);
  return m.derived.mu_vlc * gain * gain;
}

/// Density of the per-user SNR; zero outside [gamma_min, gamma_max].
inline double vlc_snr_pdf(double gamma, const VlcModel& m) {
  const auto& d = m.derived;
  if (!(gamma >= d.gamma_min && gamma <= d.gamma_max)) return 0.0;
  const double k = d.lambertian_order + 3.0;
  const double re2 = d.cell_radius_m * d.cell_radius_m;
  return std::pow(d.mu_vlc, 1.0 / k) * std::pow(d.im_const, 2.0 / k) / (re2 * k) * std::pow(gamma, -(k + 1.0) / k);
}

/// Per-user SNR CDF, clamped to 0 below gamma_min and 1 above gamma_max.
inline double vlc_snr_cdf(double gamma, const VlcModel& m) {
  const auto& d = m.derived;
  if (gamma < d.gamma_min) return 0.0;
  if (gamma > d.gamma_max) return 1.0;
  const double k = d.lambertian_order + 3.0;
  const double L = m.geometry.height_m;
  const double re2 = d.cell_radius_m * d.cell_radius_m;
  const double f = 1.0 + L * L / re2 - std::pow(d.im_const, 2.0 / k) / re2 * std::pow(gamma / d.mu_vlc, -1.0 / k);
  return std::clamp(f, 0.0, 1.0);
}

/// CDF of the best of N i.i.d. VLC links.
inline double vlc_best_of_n_cdf(double gamma, const VlcModel& m) {
  return std::pow(vlc_snr_cdf(gamma, m), m.geometry.n_leds);
}

}  // namespace rfvlc

#endif  // RFVLC_VLC_CHANNEL_HPP
