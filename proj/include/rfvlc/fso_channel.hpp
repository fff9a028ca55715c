#pragma once
#ifndef RFVLC_FSO_CHANNEL_HPP
#define RFVLC_FSO_CHANNEL_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "rfvlc/special/bessel_k.hpp"
#include "rfvlc/special/gamma.hpp"

// Gamma-Gamma turbulence statistics of the FSO hop.
//
// Irradiance is normalised to E[I] = 1 and the electrical SNR is
// gamma = mu2 * I^2, so that
//
//   f(gamma) = (ab)^{(a+b)/2} gamma^{(a+b)/4 - 1}
//              / (Gamma(a) Gamma(b) mu2^{(a+b)/4}) * K_{a-b}(2 sqrt(ab sqrt(gamma/mu2)))
//   F(gamma) = G^{2,1}_{1,3}(z | 1; a, b, 0) / (Gamma(a) Gamma(b)),  z = ab sqrt(gamma/mu2)

namespace rfvlc {

/// Shape pair of the Gamma-Gamma law, larger shape first.
struct GammaGammaShape {
  double alpha;
  double beta;

  static GammaGammaShape make(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
      throw std::invalid_argument("GammaGammaShape: shapes must be positive and finite");
    }
    return a >= b ? GammaGammaShape{a, b} : GammaGammaShape{b, a};
  }
};

/// Plane wave, zero inner scale.  sigma_r2 is the Rytov variance.
inline GammaGammaShape shapes_from_rytov(double sigma_r2) {
  if (!(sigma_r2 > 0.0) || !std::isfinite(sigma_r2)) {
    throw std::invalid_argument("shapes_from_rytov: Rytov variance must be positive");
  }
  const double s125 = std::pow(sigma_r2, 6.0 / 5.0);  // sigma_R^{12/5}
  const double a = 1.0 / std::expm1(0.49 * sigma_r2 / std::pow(1.0 + 1.11 * s125, 7.0 / 6.0));
  const double b = 1.0 / std::expm1(0.51 * sigma_r2 / std::pow(1.0 + 0.69 * s125, 5.0 / 6.0));
  return GammaGammaShape::make(a, b);
}

inline double fso_snr_log_pdf(double gamma, double mu2, GammaGammaShape s) {
  if (!(gamma > 0.0)) throw std::domain_error("fso_snr_pdf: gamma must be positive");
  const double ab = s.alpha * s.beta;
  const double q = 0.25 * (s.alpha + s.beta);
  const double arg = 2.0 * std::sqrt(ab * std::sqrt(gamma / mu2));
  return 2.0 * q * std::log(ab) + (q - 1.0) * std::log(gamma) - std::lgamma(s.alpha) - std::lgamma(s.beta) -
         q * std::log(mu2) + special::log_bessel_k(s.alpha - s.beta, arg);
}

inline double fso_snr_pdf(double gamma, double mu2, GammaGammaShape s) {
  return std::exp(fso_snr_log_pdf(gamma, mu2, s));
}

enum class FsoCdfMethod { kZero, kSeries, kQuadrature };

struct FsoCdfEvaluation {
  double value;
  FsoCdfMethod method;
};

namespace detail {

inline constexpr double kSeriesRelStop = 1e-14;
inline constexpr double kMaxCancellation = 1e6;  // six decimal digits
inline constexpr double kNearIntegerGap = 1e-3;
inline constexpr double kSeriesMaxZ = 1000.0;

struct ResidueSeries {
  double sum;
  double max_term;
};

// sum_k z^k / (k! (c)_k (lead + k)),  c = 1 + lead - other
inline ResidueSeries residue_series(double lead, double other, double z) {
  const double c = 1.0 + lead - other;
  double t = 1.0;
  double sum = 1.0 / lead;
  double max_term = std::abs(sum);
  for (int k = 0; k < 100000; ++k) {
    t *= z / ((k + 1.0) * (c + k));
    const double term = t / (lead + k + 1.0);
    sum += term;
    max_term = std::max(max_term, std::abs(term));
    if (std::abs(term) <= kSeriesRelStop * std::abs(sum) && (k + 2.0) * (c + k + 1.0) > 2.0 * z) break;
  }
  return {sum, max_term};
}

/// Residue series of the Meijer-G for non-integer alpha - beta.  Returns nullopt
/// when the two hypergeometric-type series cancel by more than six digits.
inline std::optional<double> fso_cdf_series(double gamma, double mu2, GammaGammaShape s) {
  const double diff = s.alpha - s.beta;
  if (std::abs(diff - std::round(diff)) < kNearIntegerGap) return std::nullopt;
  const double z = s.alpha * s.beta * std::sqrt(gamma / mu2);
  if (z > kSeriesMaxZ) return std::nullopt;

  const double log_norm = std::lgamma(s.alpha) + std::lgamma(s.beta);
  const double log_z = std::log(z);
  // Poles of Gamma(alpha - s): Gamma(beta - alpha) z^alpha sum(...)
  const auto ga = special::signed_lgamma(s.beta - s.alpha);
  const auto gb = special::signed_lgamma(s.alpha - s.beta);
  const double pa = ga.sign * std::exp(ga.log_abs - log_norm + s.alpha * log_z);
  const double pb = gb.sign * std::exp(gb.log_abs - log_norm + s.beta * log_z);
  const auto sa = residue_series(s.alpha, s.beta, z);
  const auto sb = residue_series(s.beta, s.alpha, z);

  const double value = pa * sa.sum + pb * sb.sum;
  const double scale = std::max(std::abs(pa) * std::max(std::abs(sa.sum), sa.max_term),
                                std::abs(pb) * std::max(std::abs(sb.sum), sb.max_term));
  if (value == 0.0 && scale == 0.0) return 0.0;
  if (!std::isfinite(value) || value <= 0.0 || value > 1.0) return std::nullopt;
  if (scale > kMaxCancellation * value) return std::nullopt;
  return value;
}

/// F(gamma) by adaptive Gauss-Kronrod integration of the density over
/// u = ln(gamma).  Below gamma = mu2 the lower tail is integrated directly;
/// above it, 1 - (upper tail), so both sides keep full relative accuracy.
inline double fso_cdf_quadrature(double gamma, double mu2, GammaGammaShape s) {
  using boost::math::quadrature::gauss_kronrod;
  const auto h = [&](double u) {
    const double g = std::exp(u);
    if (g == 0.0 || !std::isfinite(g)) return 0.0;
    return std::exp(fso_snr_log_pdf(g, mu2, s) + u);
  };
  const auto segment = [&](double a, double b) {
    return gauss_kronrod<double, 15>::integrate(h, a, b, 15, 1e-13);
  };
  constexpr double kWidth = 1.0;
  constexpr double kTailRel = 1e-17;
  constexpr int kMaxSegments = 20000;

  const double u0 = std::log(gamma);
  const bool lower = gamma <= mu2;
  double total = 0.0;
  double edge = u0;
  for (int i = 0; i < kMaxSegments; ++i) {
    const double next = lower ? edge - kWidth : edge + kWidth;
    const double seg = lower ? segment(next, edge) : segment(edge, next);
    total += seg;
    const double h_next = h(next);
    const bool receding = h_next <= h(edge);
    edge = next;
    if (receding && seg <= kTailRel * total) break;
    if (receding && total == 0.0 && h_next == 0.0) break;
  }
  const double f = lower ? total : 1.0 - total;
  return std::clamp(f, 0.0, 1.0);
}

}  // namespace detail

/// CDF with the evaluation route that produced it.
inline FsoCdfEvaluation fso_snr_cdf_detailed(double gamma, double mu2, GammaGammaShape s) {
  if (!(gamma >= 0.0)) throw std::domain_error("fso_snr_cdf: gamma must be non-negative");
  if (gamma == 0.0) return {0.0, FsoCdfMethod::kZero};
  if (std::isinf(gamma)) return {1.0, FsoCdfMethod::kZero};
  if (auto v = detail::fso_cdf_series(gamma, mu2, s)) return {*v, FsoCdfMethod::kSeries};
  return {detail::fso_cdf_quadrature(gamma, mu2, s), FsoCdfMethod::kQuadrature};
}

inline double fso_snr_cdf(double gamma, double mu2, GammaGammaShape s) {
  return fso_snr_cdf_detailed(gamma, mu2, s).value;
}

}  // namespace rfvlc

#endif  // RFVLC_FSO_CHANNEL_HPP
