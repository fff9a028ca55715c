#pragma once
#ifndef RFVLC_RF_CHANNEL_HPP
#define RFVLC_RF_CHANNEL_HPP

#include <cmath>
#include <stdexcept>

#include "rfvlc/scenario.hpp"

// Rayleigh-faded RF hop: the instantaneous SNR is exponential with mean mu1.

namespace rfvlc {

inline double rf_snr_pdf(double gamma, const RfChannelParams& p) {
  if (!(gamma >= 0.0)) throw std::domain_error("rf_snr_pdf: gamma must be non-negative");
  return std::exp(-gamma / p.mu1) / p.mu1;
}

/// 1 - exp(-gamma/mu1), via expm1 so tiny ratios keep full precision.
inline double rf_snr_cdf(double gamma, const RfChannelParams& p) {
  if (!(gamma >= 0.0)) throw std::domain_error("rf_snr_cdf: gamma must be non-negative");
  return -std::expm1(-gamma / p.mu1);
}

}  // namespace rfvlc

#endif  // RFVLC_RF_CHANNEL_HPP
