#pragma once
#ifndef RFVLC_CLI_REPORT_HPP
#define RFVLC_CLI_REPORT_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rfvlc/cli/config.hpp"
#include "rfvlc/cli/sweep.hpp"
#include "rfvlc/mc/engine.hpp"
#include "rfvlc/relay.hpp"
#include "rfvlc/units.hpp"

namespace rfvlc::cli {

struct PointReport {
  ScenarioConfig inputs;
  GammaGammaShape shape;
  DerivedVlc vlc;
  OutageBreakdown outage;
  std::optional<mc::McEstimate> mc;
};

inline PointReport run_point(const ScenarioConfig& c, const mc::McConfig& mc_cfg) {
  const auto s = c.to_scenario();
  PointReport r{c, s.fso.shape, derive_vlc(s.vlc), outage_breakdown(s), std::nullopt};
  if (mc_cfg.samples > 0) r.mc = mc::estimate_outage(s, mc_cfg);
  return r;
}

inline nlohmann::json point_to_json(const PointReport& r) {
  nlohmann::json j;
  const auto& c = r.inputs;
  j["scenario"] = {{"mu1_db", c.mu1_db},     {"mu2_db", c.mu2_db}, {"rytov_var", c.rytov_var},
                   {"n_leds", static_cast<int>(c.n_leds)}, {"pt_w", c.pt_w}, {"L_m", c.L_m},
                   {"gamma_th_db", c.gamma_th_db}};
  j["derived"] = {{"alpha", r.shape.alpha},
                  {"beta", r.shape.beta},
                  {"lambertian_order", r.vlc.lambertian_order},
                  {"cell_radius_m", r.vlc.cell_radius_m},
                  {"gamma_min_db", linear_to_db(r.vlc.gamma_min)},
                  {"gamma_max_db", linear_to_db(r.vlc.gamma_max)}};
  const auto& o = r.outage;
  j["outage"] = {{"f_rf", o.f_rf},
                 {"f_fso", o.f_fso},
                 {"f_first_hop", o.f_first_hop},
                 {"f_vlc_single", o.f_vlc_single},
                 {"f_second_hop", o.f_second_hop},
                 {"p_out", o.p_out},
                 {"p_out_fso_only", o.p_out_fso_only},
                 {"floor", o.floor}};
  if (o.p_out > 0.0) j["outage"]["fso_only_over_hybrid"] = o.p_out_fso_only / o.p_out;
  if (r.mc) j["monte_carlo"] = {{"p_hat", r.mc->p_hat}, {"ci95", r.mc->half_width_95}, {"samples", r.mc->n}};
  return j;
}

/// Plain "key = value" rendering of the JSON report, one section per block.
inline std::string point_to_text(const PointReport& r) {
  const auto j = point_to_json(r);
  std::ostringstream out;
  for (const auto& section : {"scenario", "derived", "outage", "monte_carlo"}) {
    if (!j.contains(section)) continue;
    out << '[' << section << "]\n";
    for (const auto& [k, v] : j[section].items()) {
      out << k << " = " << (v.is_number_float() ? format_number(v.get<double>()) : v.dump()) << '\n';
    }
  }
  return out.str();
}

struct CheckResult {
  std::string name;
  bool pass;
  double observed;
  double expected;
  double tolerance;
};

struct ValidateOptions {
  /// Multiplies the analytic outage before the MC comparison.  Test hook for
  /// the negative control; 1 in normal use.
  double analytic_scale = 1.0;
};

/// Boundary invariants plus the analytic-vs-MC agreement check for one scenario.
inline std::vector<CheckResult> run_validate(const ScenarioConfig& c, const mc::McConfig& mc_cfg,
                                             const ValidateOptions& opt = {}) {
  const auto s = c.to_scenario();
  const auto vlc = VlcModel::make(s.vlc);
  const auto b = outage_breakdown(s);
  std::vector<CheckResult> out;
  const auto add = [&](std::string name, double observed, double expected, double tol) {
    out.push_back({std::move(name), std::abs(observed - expected) <= tol, observed, expected, tol});
  };
  add("vlc_cdf_at_gamma_min", vlc_snr_cdf(vlc.derived.gamma_min, vlc), 0.0, 1e-12);
  add("vlc_cdf_at_gamma_max", vlc_snr_cdf(vlc.derived.gamma_max, vlc), 1.0, 1e-12);

  const double lo = std::max(b.f_first_hop, b.f_second_hop);
  const double hi = b.f_first_hop + b.f_second_hop;
  const double slack = 1e-15 * std::max(1.0, hi);
  out.push_back({"p_out_within_hop_bounds", b.p_out >= lo - slack && b.p_out <= hi + slack, b.p_out,
                 0.5 * (lo + hi), 0.5 * (hi - lo) + slack});
  out.push_back({"p_out_at_least_floor", b.p_out >= b.floor, b.p_out, b.floor, 0.0});
  out.push_back({"hybrid_not_worse_than_fso_only", b.p_out <= b.p_out_fso_only, b.p_out, b.p_out_fso_only, 0.0});
  const double direct = b.f_first_hop + b.f_second_hop - b.f_first_hop * b.f_second_hop;
  add("direct_vs_stable_form", b.p_out, direct, 1e-12 * std::max(b.p_out, 1e-300) + 1e-16);

  if (mc_cfg.samples > 0) {
    const auto est = mc::estimate_outage(s, mc_cfg);
    const double analytic = b.p_out * opt.analytic_scale;
    // With zero observed events the CI collapses; one event's worth of slack remains.
    const double tol = 3.0 * std::max(est.half_width_95, 1.0 / static_cast<double>(est.n));
    add("analytic_vs_monte_carlo", est.p_hat, analytic, tol);
  }
  return out;
}

inline std::string format_checks(const std::vector<CheckResult>& checks) {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << ": observed " << format_number(c.observed) << ", expected "
        << format_number(c.expected) << ", tolerance " << format_number(c.tolerance) << '\n';
  }
  return out.str();
}

}  // namespace rfvlc::cli

#endif  // RFVLC_CLI_REPORT_HPP
