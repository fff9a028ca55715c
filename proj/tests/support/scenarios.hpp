#pragma once

#include "rfvlc/scenario.hpp"
#include "rfvlc/units.hpp"

namespace rfvlc::testing {

/// Reference receiver with mu1 = mu2 locked; gamma_th = 10 dB by default.
inline LinkBudgetScenario make_scenario(double mu_db, double rytov_var, int n_leds, double pt_w = 1.0,
                                        double height_m = 3.0, double gamma_th_db = 10.0) {
  auto vlc = reference_vlc_geometry();
  vlc.n_leds = n_leds;
  vlc.pt_w = pt_w;
  vlc.height_m = height_m;
  return LinkBudgetScenario{
      .rf = {db_to_linear(mu_db)},
      .fso = FsoChannelParams::from_rytov(db_to_linear(mu_db), rytov_var),
      .vlc = vlc,
      .gamma_th = db_to_linear(gamma_th_db),
  };
}

}  // namespace rfvlc::testing
