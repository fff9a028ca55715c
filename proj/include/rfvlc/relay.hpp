#pragma once
#ifndef RFVLC_RELAY_HPP
#define RFVLC_RELAY_HPP

#include "rfvlc/fso_channel.hpp"
#include "rfvlc/rf_channel.hpp"
#include "rfvlc/scenario.hpp"
#include "rfvlc/vlc_channel.hpp"

// Decode-and-forward relay between a selection-combined RF/FSO hop and the
// best-of-N VLC hop.  The end-to-end SNR is min(max(g_rf, g_fso), g_vlc), so
//
//   P_out = F1 + F2 - F1 F2,  F1 = F_rf F_fso,  F2 = F_vlc^N.

namespace rfvlc {

/// CDF of max(g_rf, g_fso) for independent branches.
inline double hybrid_cdf(double gamma, const RfChannelParams& rf, const FsoChannelParams& fso) {
  return rf_snr_cdf(gamma, rf) * fso_snr_cdf(gamma, fso.mu2, fso.shape);
}

/// P(min(g1, g2) < th) from the two hop CDFs.  Written as F1 + F2 (1 - F1):
/// every term is non-negative, so neither tiny nor near-one inputs cancel.
inline double combine_hops(double f1, double f2) { return f1 + f2 * (1.0 - f1); }

struct OutageBreakdown {
  double f_rf;
  double f_fso;
  double f_first_hop;  // hybrid RF/FSO
  double f_vlc_single;
  double f_second_hop;  // best of N
  double p_out;
  double p_out_fso_only;
  double floor;
};

inline OutageBreakdown outage_breakdown(const LinkBudgetScenario& s) {
  s.validate();
  const auto vlc = VlcModel::make(s.vlc);
  OutageBreakdown b{};
  b.f_rf = rf_snr_cdf(s.gamma_th, s.rf);
  b.f_fso = fso_snr_cdf(s.gamma_th, s.fso.mu2, s.fso.shape);
  b.f_first_hop = b.f_rf * b.f_fso;
  b.f_vlc_single = vlc_snr_cdf(s.gamma_th, vlc);
  b.f_second_hop = vlc_best_of_n_cdf(s.gamma_th, vlc);
  b.p_out = combine_hops(b.f_first_hop, b.f_second_hop);
  b.p_out_fso_only = combine_hops(b.f_fso, b.f_second_hop);
  b.floor = b.f_second_hop;
  return b;
}

inline double outage_probability(const LinkBudgetScenario& s) {
  s.validate();
  const auto vlc = VlcModel::make(s.vlc);
  return combine_hops(hybrid_cdf(s.gamma_th, s.rf, s.fso), vlc_best_of_n_cdf(s.gamma_th, vlc));
}

/// Limit of the outage probability as the first hop becomes outage-free.
inline double outage_floor(const LinkBudgetScenario& s) {
  s.validate();
  return vlc_best_of_n_cdf(s.gamma_th, VlcModel::make(s.vlc));
}

/// Same relay with the RF branch removed: the first hop is the FSO link alone.
inline double fso_only_outage(const LinkBudgetScenario& s) {
  s.validate();
  const auto vlc = VlcModel::make(s.vlc);
  return combine_hops(fso_snr_cdf(s.gamma_th, s.fso.mu2, s.fso.shape), vlc_best_of_n_cdf(s.gamma_th, vlc));
}

}  // namespace rfvlc

#endif  // RFVLC_RELAY_HPP
