#pragma once
#ifndef RFVLC_MC_SAMPLERS_HPP
#define RFVLC_MC_SAMPLERS_HPP

#include <algorithm>
#include <cmath>
#include <concepts>
#include <limits>

#include "rfvlc/fso_channel.hpp"
#include "rfvlc/scenario.hpp"
#include "rfvlc/vlc_channel.hpp"

// Per-hop SNR samplers.  Generators need uniform() on [0,1) and uniform_open()
// on (0,1); mc::Philox4x32 provides both.  All variates are built from those
// two calls only, so results do not depend on the standard library's
// distribution implementations.

namespace rfvlc::mc {

template <typename G>
concept UniformSource = requires(G g) {
  { g.uniform() } -> std::convertible_to<double>;
  { g.uniform_open() } -> std::convertible_to<double>;
};

/// Exponential inverse CDF: u in [0, 1) -> -mean ln(1 - u).
inline double rf_inverse_cdf(double u, const RfChannelParams& p) { return -p.mu1 * std::log1p(-u); }

/// Standard normal, Marsaglia polar method (one of the pair is discarded).
template <UniformSource G>
double standard_normal(G& rng) {
  for (;;) {
    const double v1 = 2.0 * rng.uniform() - 1.0;
    const double v2 = 2.0 * rng.uniform() - 1.0;
    const double s = v1 * v1 + v2 * v2;
    if (s > 0.0 && s < 1.0) return v1 * std::sqrt(-2.0 * std::log(s) / s);
  }
}

/// Gamma(shape, 1).  Marsaglia-Tsang squeeze/rejection for shape >= 1;
/// shape < 1 boosted through Gamma(shape + 1) * U^{1/shape}.
template <UniformSource G>
double standard_gamma(G& rng, double shape) {
  if (shape < 1.0) {
    const double g = standard_gamma(rng, shape + 1.0);
    return g * std::exp(std::log(rng.uniform_open()) / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = standard_normal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform_open();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

template <UniformSource G>
double sample_rf_snr(G& rng, const RfChannelParams& p) {
  return rf_inverse_cdf(rng.uniform(), p);
}

/// Unit-mean irradiance I = X Y, X ~ Gamma(alpha, 1/alpha), Y ~ Gamma(beta, 1/beta).
template <UniformSource G>
double sample_gamma_gamma_irradiance(G& rng, GammaGammaShape s) {
  const double x = standard_gamma(rng, s.alpha) / s.alpha;
  const double y = standard_gamma(rng, s.beta) / s.beta;
  return x * y;
}

template <UniformSource G>
double sample_fso_snr(G& rng, double mu2, GammaGammaShape s) {
  const double irradiance = sample_gamma_gamma_irradiance(rng, s);
  return mu2 * irradiance * irradiance;
}

/// One radius per access point, uniform over the cell disk (r = r_e sqrt(u));
/// the nearest access point sets the SNR.
template <UniformSource G>
double sample_vlc_best_snr(G& rng, const VlcModel& m) {
  double r_min = std::numeric_limits<double>::infinity();
  for (int i = 0; i < m.geometry.n_leds; ++i) {
    r_min = std::min(r_min, m.derived.cell_radius_m * std::sqrt(rng.uniform()));
  }
  return vlc_snr_at(r_min, m);
}

}  // namespace rfvlc::mc

#endif  // RFVLC_MC_SAMPLERS_HPP
