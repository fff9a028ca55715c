#pragma once
#ifndef RFVLC_SPECIAL_BESSEL_K_HPP
#define RFVLC_SPECIAL_BESSEL_K_HPP

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "rfvlc/special/gamma.hpp"

// Modified Bessel function of the second kind K_nu(x) for real order and x > 0.
//
// The order is split as |nu| = n + mu with n integer and |mu| <= 1/2.  K_mu and
// K_{mu+1} come from one of two kernels, then K_nu follows by forward recurrence
// (stable for K):
//
//   x <= 2  Temme's series.  This is the reflection formula
//           K_mu = pi/2 (I_{-mu} - I_mu)/sin(mu pi) with the 1/Gamma(1 +- mu)
//           factors expanded in mu, so integer order is a regular point rather
//           than a 0/0 limit.
//   x >  2  Steed's continued fraction (CF2), which yields e^x K_mu directly and
//           so stays accurate where the reflection difference would cancel.

namespace rfvlc::special {

namespace detail {

/// K_nu(x) = value * exp(log_factor), kept apart so large orders and large
/// arguments neither overflow nor underflow.
struct ScaledK {
  double value;
  double log_factor;
};

inline constexpr double kBesselEps = 1e-16;
inline constexpr int kBesselMaxIter = 100000;

inline ScaledK bessel_k_core(double nu, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw std::domain_error("bessel_k: x must be positive and finite");
  if (!std::isfinite(nu)) throw std::domain_error("bessel_k: order must be finite");

  const double anu = std::abs(nu);
  const int nl = static_cast<int>(anu + 0.5);
  const double mu = anu - nl;
  const double mu2 = mu * mu;
  const double xi = 1.0 / x;
  const double xi2 = 2.0 * xi;

  double k_mu = 0.0;
  double k_mu1 = 0.0;
  double log_factor = 0.0;

  if (x <= 2.0) {
    const double x2 = 0.5 * x;
    const double pimu = std::numbers::pi * mu;
    const double fact = std::abs(pimu) < kBesselEps ? 1.0 : pimu / std::sin(pimu);
    double d = -std::log(x2);
    double e = mu * d;
    const double fact2 = std::abs(e) < kBesselEps ? 1.0 : std::sinh(e) / e;
    const auto [gam1, gam2] = reciprocal_gamma_parts(mu);
    const double gampl = gam2 - mu * gam1;  // 1/Gamma(1 + mu)
    const double gammi = gam2 + mu * gam1;  // 1/Gamma(1 - mu)
    double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / gampl;
    double q = 0.5 / (e * gammi);
    double c = 1.0;
    d = x2 * x2;
    double sum1 = p;
    int i = 1;
    for (; i <= kBesselMaxIter; ++i) {
      const double di = i;
      ff = (di * ff + p + q) / (di * di - mu2);
      c *= d / di;
      p /= di - mu;
      q /= di + mu;
      const double del = c * ff;
      sum += del;
      sum1 += c * (p - di * ff);
      if (std::abs(del) < std::abs(sum) * kBesselEps) break;
    }
    if (i > kBesselMaxIter) throw std::runtime_error("bessel_k: series failed to converge");
    k_mu = sum;
    k_mu1 = sum1 * xi2;
  } else {
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d;
    double delh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    const double a1 = 0.25 - mu2;
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    int i = 2;
    for (; i <= kBesselMaxIter; ++i) {
      a -= 2.0 * (i - 1);
      c = -a * c / i;
      const double qnew = (q1 - b * q2) / a;
      q1 = q2;
      q2 = qnew;
      q += c * qnew;
      b += 2.0;
      d = 1.0 / (b + a * d);
      delh = (b * d - 1.0) * delh;
      h += delh;
      const double dels = q * delh;
      s += dels;
      if (std::abs(dels / s) < kBesselEps) break;
    }
    if (i > kBesselMaxIter) throw std::runtime_error("bessel_k: continued fraction failed to converge");
    h = a1 * h;
    k_mu = std::sqrt(std::numbers::pi / (2.0 * x)) / s;
    k_mu1 = k_mu * (mu + x + 0.5 - h) * xi;
    log_factor = -x;
  }

  constexpr double kRescale = 1e250;
  const double log_rescale = std::log(kRescale);
  for (int i = 1; i <= nl; ++i) {
    const double next = (mu + i) * xi2 * k_mu1 + k_mu;
    k_mu = k_mu1;
    k_mu1 = next;
    if (k_mu1 > kRescale) {
      k_mu /= kRescale;
      k_mu1 /= kRescale;
      log_factor += log_rescale;
    }
  }
  return {k_mu, log_factor};
}

}  // namespace detail

/// K_nu(x).  Symmetric in the order: K_{-nu} = K_nu.
inline double bessel_k(double nu, double x) {
  const auto k = detail::bessel_k_core(nu, x);
  return k.value * std::exp(k.log_factor);
}

/// e^x K_nu(x).
inline double bessel_k_scaled(double nu, double x) {
  const auto k = detail::bessel_k_core(nu, x);
  return k.value * std::exp(k.log_factor + x);
}

/// log K_nu(x), finite wherever K_nu(x) is representable as a logarithm.
inline double log_bessel_k(double nu, double x) {
  const auto k = detail::bessel_k_core(nu, x);
  return std::log(k.value) + k.log_factor;
}

}  // namespace rfvlc::special

#endif  // RFVLC_SPECIAL_BESSEL_K_HPP
