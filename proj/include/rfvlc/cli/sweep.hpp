#pragma once
#ifndef RFVLC_CLI_SWEEP_HPP
#define RFVLC_CLI_SWEEP_HPP

#include <array>
#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rfvlc/cli/config.hpp"
#include "rfvlc/mc/engine.hpp"
#include "rfvlc/relay.hpp"

namespace rfvlc::cli {

struct SweepRow {
  ScenarioConfig inputs;
  double pout_analytic = 0.0;
  std::optional<double> pout_fso_only;
  double pout_floor = 0.0;
  std::optional<mc::McEstimate> mc;
};

inline constexpr std::array<const char*, 13> kCsvColumns = {
    "mu1_db",        "mu2_db",     "rytov_var", "n_leds",  "pt_w",    "L_m",        "gamma_th_db",
    "pout_analytic", "pout_fso_only", "pout_floor", "pout_mc", "mc_ci95", "mc_samples",
};

/// SplitMix64 finaliser; gives every sweep row its own MC seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Variant scenarios in output order: cartesian product of the vary lists,
/// first list outermost.  No lists -> the base scenario alone.
inline std::vector<ScenarioConfig> expand_variants(const ScenarioConfig& base, const std::vector<VaryList>& vary) {
  std::vector<ScenarioConfig> out{base};
  for (const auto& list : vary) {
    if (list.values.empty()) throw ConfigError("sweep.vary." + list.key + ": empty value list");
    std::vector<ScenarioConfig> next;
    next.reserve(out.size() * list.values.size());
    for (const auto& c : out) {
      for (const double v : list.values) {
        auto copy = c;
        set_scenario_value(copy, list.key, v);
        next.push_back(copy);
      }
    }
    out = std::move(next);
  }
  return out;
}

inline SweepRow evaluate_row(const ScenarioConfig& c, bool with_fso_only, const mc::McConfig& mc_cfg,
                             std::uint64_t row_index) {
  const auto scenario = c.to_scenario();
  const auto b = outage_breakdown(scenario);
  SweepRow row;
  row.inputs = c;
  row.pout_analytic = b.p_out;
  row.pout_floor = b.floor;
  if (with_fso_only) row.pout_fso_only = b.p_out_fso_only;
  if (mc_cfg.samples > 0) {
    auto cfg = mc_cfg;
    cfg.seed = mix_seed(mc_cfg.seed, row_index);
    row.mc = mc::estimate_outage(scenario, cfg);
  }
  return row;
}

/// All rows, variants outer and axis inner.  Every row is validated before any
/// simulation starts, so a bad grid point fails the whole sweep up front.
inline std::vector<SweepRow> run_sweep(const FileConfig& cfg) {
  const auto variants = expand_variants(cfg.scenario, cfg.sweep.vary);
  const auto axis = cfg.sweep.axis.points();
  std::vector<ScenarioConfig> grid;
  grid.reserve(variants.size() * axis.size());
  for (const auto& v : variants) {
    for (const double x : axis) {
      auto c = v;
      set_scenario_value(c, cfg.sweep.axis.key, x);
      (void)c.to_scenario();
      grid.push_back(c);
    }
  }
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    rows.push_back(evaluate_row(grid[i], cfg.sweep.baseline_fso_only, cfg.run.mc, i));
  }
  return rows;
}

/// Shortest decimal text that round-trips to the same double.
inline std::string format_number(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

inline std::string format_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  for (std::size_t i = 0; i < kCsvColumns.size(); ++i) out << (i ? "," : "") << kCsvColumns[i];
  out << '\n';
  for (const auto& r : rows) {
    const auto& c = r.inputs;
    out << format_number(c.mu1_db) << ',' << format_number(c.mu2_db) << ',' << format_number(c.rytov_var) << ','
        << format_number(c.n_leds) << ',' << format_number(c.pt_w) << ',' << format_number(c.L_m) << ','
        << format_number(c.gamma_th_db) << ',' << format_number(r.pout_analytic) << ','
        << (r.pout_fso_only ? format_number(*r.pout_fso_only) : "") << ',' << format_number(r.pout_floor) << ',';
    if (r.mc) {
      out << format_number(r.mc->p_hat) << ',' << format_number(r.mc->half_width_95) << ',' << r.mc->n;
    } else {
      out << ",,";
    }
    out << '\n';
  }
  return out.str();
}

inline nlohmann::json row_to_json(const SweepRow& r) {
  const auto& c = r.inputs;
  nlohmann::json j = {
      {"mu1_db", c.mu1_db},           {"mu2_db", c.mu2_db},           {"rytov_var", c.rytov_var},
      {"n_leds", static_cast<int>(c.n_leds)}, {"pt_w", c.pt_w},       {"L_m", c.L_m},
      {"gamma_th_db", c.gamma_th_db}, {"pout_analytic", r.pout_analytic}, {"pout_floor", r.pout_floor},
  };
  j["pout_fso_only"] = r.pout_fso_only ? nlohmann::json(*r.pout_fso_only) : nlohmann::json(nullptr);
  if (r.mc) {
    j["pout_mc"] = r.mc->p_hat;
    j["mc_ci95"] = r.mc->half_width_95;
    j["mc_samples"] = r.mc->n;
  } else {
    j["pout_mc"] = nullptr;
    j["mc_ci95"] = nullptr;
    j["mc_samples"] = nullptr;
  }
  return j;
}

inline std::string format_json(const std::vector<SweepRow>& rows) {
  auto arr = nlohmann::json::array();
  for (const auto& r : rows) arr.push_back(row_to_json(r));
  return arr.dump(2) + "\n";
}

}  // namespace rfvlc::cli

#endif  // RFVLC_CLI_SWEEP_HPP
