#include <gtest/gtest.h>

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "rfvlc/mc/philox.hpp"
#include "rfvlc/vlc_channel.hpp"

using rfvlc::VlcModel;

namespace {

VlcModel reference_model(int n_leds = 1) {
  auto g = rfvlc::reference_vlc_geometry();
  g.n_leds = n_leds;
  return VlcModel::make(g);
}

}  // namespace

TEST(VlcGain, CellCentreAndEdge) {
  const auto m = reference_model();
  const auto& d = m.derived;
  EXPECT_NEAR(rfvlc::vlc_gain_at(0.0, m), d.im_const / std::pow(3.0, 4.0), 1e-20);
  EXPECT_NEAR(rfvlc::vlc_gain_at(d.cell_radius_m, m), d.im_const / std::pow(36.0, 2.0), 1e-20);
  EXPECT_NEAR(rfvlc::vlc_snr_at(0.0, m), d.gamma_max, 1e-12 * d.gamma_max);
  EXPECT_NEAR(rfvlc::vlc_snr_at(d.cell_radius_m, m), d.gamma_min, 1e-12 * d.gamma_min);
}

TEST(VlcGain, MatchesDirectLambertianFormula) {
  // mpmath, from distance, cos(theta), concentrator gain and cos(psi) directly
  EXPECT_NEAR(rfvlc::vlc_gain_at(1.0, reference_model()), 3.4377467707849392526e-6, 1e-13 * 3.44e-6);
}

TEST(VlcGain, StrictlyDecreasingInRadius) {
  const auto m = reference_model();
  double prev = rfvlc::vlc_gain_at(0.0, m);
  for (int i = 1; i <= 200; ++i) {
    const double g = rfvlc::vlc_gain_at(m.derived.cell_radius_m * i / 200.0, m);
    EXPECT_LT(g, prev);
    prev = g;
  }
  EXPECT_THROW(rfvlc::vlc_gain_at(-0.1, m), std::domain_error);
  EXPECT_THROW(rfvlc::vlc_gain_at(m.derived.cell_radius_m * 1.001, m), std::domain_error);
}

TEST(VlcSnr, PdfNormalisedWithPowerLawShape) {
  const auto m = reference_model();
  const auto& d = m.derived;
  const auto f = [&](double g) { return rfvlc::vlc_snr_pdf(g, m); };
  double err = 0.0;
  const double total = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, d.gamma_min, d.gamma_max,
                                                                                   20, 1e-14, &err);
  EXPECT_NEAR(total, 1.0, 1e-9);
  // f ~ gamma^{-(m_l+4)/(m_l+3)} = gamma^{-5/4}
  EXPECT_NEAR(f(20.0) / f(80.0), std::pow(4.0, 1.25), 1e-12);
  EXPECT_NEAR(f(d.gamma_min), 0.14804406601634037928, 1e-12 * 0.148);
  EXPECT_EQ(f(0.5 * d.gamma_min), 0.0);
  EXPECT_EQ(f(2.0 * d.gamma_max), 0.0);
}

TEST(VlcSnr, CdfSupportEdgesExact) {
  const auto m = reference_model();
  EXPECT_NEAR(rfvlc::vlc_snr_cdf(m.derived.gamma_min, m), 0.0, 1e-12);
  EXPECT_NEAR(rfvlc::vlc_snr_cdf(m.derived.gamma_max, m), 1.0, 1e-12);
  EXPECT_EQ(rfvlc::vlc_snr_cdf(0.1 * m.derived.gamma_min, m), 0.0);
  EXPECT_EQ(rfvlc::vlc_snr_cdf(10.0 * m.derived.gamma_max, m), 1.0);
}

TEST(VlcSnr, CdfMidSupportFrozenAndEmpirical) {
  const auto m = reference_model();
  const double f10 = rfvlc::vlc_snr_cdf(10.0, m);
  EXPECT_NEAR(f10, 0.41487243496706896652, 1e-13);
  // Empirical check: 10^7 users uniform over the disk.
  rfvlc::mc::Philox4x32 rng(2024, 0);
  constexpr int kDraws = 10'000'000;
  int below = 0;
  for (int i = 0; i < kDraws; ++i) {
    const double r = m.derived.cell_radius_m * std::sqrt(rng.uniform());
    if (rfvlc::vlc_snr_at(r, m) <= 10.0) ++below;
  }
  const double p = static_cast<double>(below) / kDraws;
  const double sigma = std::sqrt(f10 * (1.0 - f10) / kDraws);
  EXPECT_NEAR(p, f10, 4.0 * sigma);
}

TEST(VlcSnr, CdfDerivativeIsPdf) {
  const auto m = reference_model();
  const auto& d = m.derived;
  for (int i = 1; i < 100; ++i) {
    const double g = d.gamma_min * std::pow(d.gamma_max / d.gamma_min, i / 100.0);
    const double h = 1e-6 * g;
    const double deriv = (rfvlc::vlc_snr_cdf(g + h, m) - rfvlc::vlc_snr_cdf(g - h, m)) / (2.0 * h);
    const double pdf = rfvlc::vlc_snr_pdf(g, m);
    EXPECT_NEAR(deriv, pdf, 1e-6 * pdf) << g;
  }
}

TEST(VlcSnr, PowerRescaling) {
  auto g = rfvlc::reference_vlc_geometry();
  g.n_leds = 1;
  const auto full = VlcModel::make(g);
  g.pt_w *= 0.5;
  const auto half = VlcModel::make(g);
  for (double gamma : {3.0, 10.0, 47.0, 300.0}) {
    EXPECT_NEAR(rfvlc::vlc_snr_cdf(gamma, full), rfvlc::vlc_snr_cdf(gamma / 4.0, half), 1e-14) << gamma;
  }
}

TEST(VlcBestOfN, SelectionLaw) {
  const auto one = reference_model(1);
  EXPECT_EQ(rfvlc::vlc_best_of_n_cdf(10.0, one), rfvlc::vlc_snr_cdf(10.0, one));
  double prev = 1.0;
  for (int n : {6, 8, 10}) {
    const auto m = reference_model(n);
    EXPECT_NEAR(rfvlc::vlc_best_of_n_cdf(m.derived.gamma_max, m), 1.0, 1e-12);
    const double f = rfvlc::vlc_best_of_n_cdf(10.0, m);
    EXPECT_LT(f, prev) << n;
    EXPECT_NEAR(f, std::pow(0.41487243496706896652, n), 1e-12);
    prev = f;
  }
}
