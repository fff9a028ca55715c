#pragma once
#ifndef RFVLC_SPECIAL_GAMMA_HPP
#define RFVLC_SPECIAL_GAMMA_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rfvlc::special {

/// log|Gamma(x)| together with the sign of Gamma(x).
struct SignedLogGamma {
  double log_abs;
  int sign;
};

inline SignedLogGamma signed_lgamma(double x) {
  if (x > 0.0) return {std::lgamma(x), 1};
  if (x == std::floor(x)) throw std::domain_error("signed_lgamma: pole at non-positive integer");
  // Reflection: Gamma(x) Gamma(1 - x) = pi / sin(pi x)
  const double s = std::sin(std::numbers::pi * x);
  const double log_abs = std::log(std::numbers::pi / std::abs(s)) - std::lgamma(1.0 - x);
  return {log_abs, s > 0.0 ? 1 : -1};
}

/// 1/Gamma(1 + mu) split into even and odd parts for |mu| <= 1/2:
///   gam1 = (1/Gamma(1 - mu) - 1/Gamma(1 + mu)) / (2 mu)
///   gam2 = (1/Gamma(1 - mu) + 1/Gamma(1 + mu)) / 2
/// Both are smooth through mu = 0, which the Temme series for K_nu needs.
struct ReciprocalGammaParts {
  double gam1;
  double gam2;
};

inline ReciprocalGammaParts reciprocal_gamma_parts(double mu) {
  // Taylor coefficients c_k of 1/Gamma(z) = sum_{k>=1} c_k z^k.
  static constexpr double c[] = {
      1.0,
      0.5772156649015328606,
      -0.6558780715202538811,
      -0.0420026350340952355,
      0.1665386113822914895,
      -0.0421977345555443367,
      -0.0096219715278769736,
      0.0072189432466630995,
      -0.0011651675918590651,
      -0.0002152416741149510,
      0.0001280502823881162,
      -0.0000201348547807882,
      -0.0000012504934821427,
      0.0000011330272319817,
      -0.0000002056338416978,
      0.0000000061160951045,
      0.0000000050020076445,
      -0.0000000011812745705,
      0.0000000001043426712,
      0.0000000000077822634,
      -0.0000000000036968056,
      0.0000000000005100370,
      -0.0000000000000205833,
      -0.0000000000000053481,
      0.0000000000000012268,
      -0.0000000000000001181,
  };
  constexpr int n = static_cast<int>(sizeof(c) / sizeof(c[0]));
  // 1/Gamma(1 + mu) = sum_{j>=0} c_{j+1} mu^j  (c indexed from 0 here).
  const double mu2 = mu * mu;
  double even = 0.0;
  double odd = 0.0;
  for (int j = n - 1; j >= 0; --j) {
    if (j % 2 == 0) {
      even = even * mu2 + c[j];
    } else {
      odd = odd * mu2 + c[j];
    }
  }
  return {-odd, even};
}

}  // namespace rfvlc::special

#endif  // RFVLC_SPECIAL_GAMMA_HPP
