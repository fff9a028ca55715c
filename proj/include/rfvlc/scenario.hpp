#pragma once
#ifndef RFVLC_SCENARIO_HPP
#define RFVLC_SCENARIO_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "rfvlc/fso_channel.hpp"

namespace rfvlc {

/// Rejected parameter.  key() is the dotted configuration path, e.g. "vlc.pt_w".
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string key, const std::string& what)
      : std::invalid_argument(key + ": " + what), key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

namespace detail {

inline void require_positive(double v, const char* key) {
  if (!(v > 0.0) || !std::isfinite(v)) throw ValidationError(key, "must be positive and finite");
}

}  // namespace detail

struct RfChannelParams {
  double mu1;  // average SNR, linear

  void validate() const { detail::require_positive(mu1, "rf.mu1_db"); }
};

struct FsoChannelParams {
  double mu2;        // electrical SNR, linear
  double rytov_var;  // sigma_R^2
  GammaGammaShape shape;

  static FsoChannelParams from_rytov(double mu2, double rytov_var) {
    detail::require_positive(mu2, "fso.mu2_db");
    detail::require_positive(rytov_var, "fso.rytov_var");
    return {mu2, rytov_var, shapes_from_rytov(rytov_var)};
  }

  void validate() const {
    detail::require_positive(mu2, "fso.mu2_db");
    detail::require_positive(rytov_var, "fso.rytov_var");
    detail::require_positive(shape.alpha, "fso.alpha");
    detail::require_positive(shape.beta, "fso.beta");
  }
};

/// Indoor VLC cell: geometry and electro-optics, SI units, angles in radians.
struct VlcGeometry {
  double height_m;        // L, LED plane to receiver plane
  double phi_half;        // semi-angle at half illuminance
  double psi_fov;         // receiver field of view
  double area_m2;         // photodetector area A
  double responsivity;    // A/W
  double filter_gain;     // T
  double ref_index;       // concentrator refractive index n
  double eta;             // optical-to-electrical conversion efficiency
  double n0_w_per_hz;     // noise spectral density
  double bandwidth_hz;    // baseband modulation bandwidth
  double pt_w;            // optical power per LED
  int n_leds;             // access points N

  void validate() const {
    detail::require_positive(height_m, "vlc.L_m");
    detail::require_positive(area_m2, "vlc.area_m2");
    detail::require_positive(responsivity, "vlc.responsivity");
    detail::require_positive(filter_gain, "vlc.filter_gain");
    detail::require_positive(ref_index, "vlc.ref_index");
    detail::require_positive(eta, "vlc.eta");
    detail::require_positive(n0_w_per_hz, "vlc.n0_w_per_hz");
    detail::require_positive(bandwidth_hz, "vlc.bandwidth_hz");
    detail::require_positive(pt_w, "vlc.pt_w");
    constexpr double kRightAngle = std::numbers::pi / 2.0;
    if (!(phi_half > 0.0 && phi_half < kRightAngle)) {
      throw ValidationError("vlc.phi_half_deg", "must lie in (0, 90) degrees");
    }
    if (!(psi_fov > 0.0 && psi_fov <= kRightAngle)) {
      throw ValidationError("vlc.psi_fov_deg", "must lie in (0, 90] degrees");
    }
    if (phi_half > psi_fov) {
      throw ValidationError("vlc.phi_half_deg",
                            "exceeds the receiver field of view vlc.psi_fov_deg; the cell edge would fall "
                            "outside the FOV");
    }
    if (n_leds < 1) throw ValidationError("vlc.n_leds", "must be at least 1");
  }
};

/// Quantities derived once from a VlcGeometry.
struct DerivedVlc {
  double lambertian_order;  // m_l
  double cell_radius_m;     // r_e
  double im_const;          // gain constant: I(r) = im_const / (r^2 + L^2)^{(m_l+3)/2}
  double mu_vlc;            // P_t^2 eta^2 / (N0 B)
  double gamma_min;
  double gamma_max;
};

inline DerivedVlc derive_vlc(const VlcGeometry& g) {
  g.validate();
  const double ml = -std::numbers::ln2 / std::log(std::cos(g.phi_half));
  const double re = g.height_m * std::tan(g.phi_half);
  const double s = std::sin(g.psi_fov);
  const double concentrator = g.ref_index * g.ref_index / (s * s);
  const double im = g.area_m2 * (ml + 1.0) * g.responsivity * g.filter_gain * concentrator *
                    std::pow(g.height_m, ml + 1.0) / (2.0 * std::numbers::pi);
  const double mu_vlc = g.pt_w * g.pt_w * g.eta * g.eta / (g.n0_w_per_hz * g.bandwidth_hz);
  const double L2 = g.height_m * g.height_m;
  // Squared gain at the cell edge and at the cell centre: exponent m_l + 3 on (r^2 + L^2).
  const double gamma_min = mu_vlc * im * im / std::pow(re * re + L2, ml + 3.0);
  const double gamma_max = mu_vlc * im * im / std::pow(L2, ml + 3.0);
  return {ml, re, im, mu_vlc, gamma_min, gamma_max};
}

/// Geometry bundled with its derived constants.
struct VlcModel {
  VlcGeometry geometry;
  DerivedVlc derived;

  static VlcModel make(const VlcGeometry& g) { return {g, derive_vlc(g)}; }
};

struct LinkBudgetScenario {
  RfChannelParams rf;
  FsoChannelParams fso;
  VlcGeometry vlc;
  double gamma_th;  // outage threshold, linear

  void validate() const {
    rf.validate();
    fso.validate();
    vlc.validate();
    detail::require_positive(gamma_th, "run.gamma_th_db");
  }
};

/// Fixed electro-optical constants of the reference receiver, plus the
/// non-measured defaults (L, Phi_1/2, B, P_t) used by the shipped configs.
inline VlcGeometry reference_vlc_geometry() {
  return VlcGeometry{
      .height_m = 3.0,
      .phi_half = std::numbers::pi / 3.0,
      .psi_fov = std::numbers::pi / 3.0,
      .area_m2 = 1e-4,
      .responsivity = 0.4,
      .filter_gain = 1.0,
      .ref_index = 1.5,
      .eta = 0.8,
      .n0_w_per_hz = 1e-21,
      .bandwidth_hz = 20e6,
      .pt_w = 1.0,
      .n_leds = 8,
  };
}

}  // namespace rfvlc

#endif  // RFVLC_SCENARIO_HPP
