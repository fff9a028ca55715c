#pragma once
#ifndef RFVLC_CLI_CONFIG_HPP
#define RFVLC_CLI_CONFIG_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rfvlc/mc/engine.hpp"
#include "rfvlc/scenario.hpp"
#include "rfvlc/units.hpp"

// Scenario files are INI-style:
//
//   # comment
//   [rf]
//   mu1_db = 25
//   [vlc]
//   pt_w = 1
//
// Keys are addressed as "section.key".  Every scenario key has a default
// (reference_config()), unknown keys are rejected, and a key may appear once.

namespace rfvlc::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ConfigEntry {
  std::string key;  // section.key
  std::string value;
  int line;
};

/// Parsed file, entries in file order.
struct ConfigDocument {
  std::vector<ConfigEntry> entries;

  const ConfigEntry* find(std::string_view key) const {
    const auto it = std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.key == key; });
    return it == entries.end() ? nullptr : &*it;
  }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace detail

inline ConfigDocument parse_config(std::istream& in, const std::string& origin = "<config>") {
  ConfigDocument doc;
  std::string section;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find_first_of("#;"); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto where = origin + ":" + std::to_string(line_no) + ": ";
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(where + "unterminated section header");
      section = std::string(detail::trim(line.substr(1, line.size() - 2)));
      if (section.empty()) throw ConfigError(where + "empty section name");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(where + "expected 'key = value'");
    const auto name = detail::trim(line.substr(0, eq));
    const auto value = detail::trim(line.substr(eq + 1));
    if (name.empty()) throw ConfigError(where + "missing key name");
    if (section.empty()) throw ConfigError(where + "key '" + std::string(name) + "' outside any section");
    std::string key = section + "." + std::string(name);
    if (const auto* prev = doc.find(key)) {
      throw ConfigError(where + "duplicate key '" + key + "' (first set on line " + std::to_string(prev->line) + ")");
    }
    doc.entries.push_back({std::move(key), std::string(value), line_no});
  }
  return doc;
}

inline ConfigDocument load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in, path);
}

inline double parse_number(std::string_view text, std::string_view key) {
  const auto t = detail::trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw ConfigError(std::string(key) + ": expected a number, got '" + std::string(t) + "'");
  }
  return v;
}

inline bool parse_bool(std::string_view text, std::string_view key) {
  const auto t = detail::trim(text);
  if (t == "true" || t == "yes" || t == "on" || t == "1") return true;
  if (t == "false" || t == "no" || t == "off" || t == "0") return false;
  throw ConfigError(std::string(key) + ": expected true/false, got '" + std::string(t) + "'");
}

/// Scenario in the units of the file format (dB, degrees).
struct ScenarioConfig {
  double mu1_db = 25.0;
  double mu2_db = 25.0;
  double rytov_var = 0.25;
  double L_m = 3.0;
  double phi_half_deg = 60.0;
  double psi_fov_deg = 60.0;
  double area_m2 = 1e-4;
  double responsivity = 0.4;
  double filter_gain = 1.0;
  double ref_index = 1.5;
  double eta = 0.8;
  double n0_w_per_hz = 1e-21;
  double bandwidth_hz = 20e6;
  double pt_w = 1.0;
  double n_leds = 8;
  double gamma_th_db = 10.0;

  LinkBudgetScenario to_scenario() const {
    if (n_leds != std::floor(n_leds)) throw ValidationError("vlc.n_leds", "must be an integer");
    if (!std::isfinite(mu1_db)) throw ValidationError("rf.mu1_db", "must be finite");
    if (!std::isfinite(mu2_db)) throw ValidationError("fso.mu2_db", "must be finite");
    if (!std::isfinite(gamma_th_db)) throw ValidationError("run.gamma_th_db", "must be finite");
    LinkBudgetScenario s{
        .rf = {db_to_linear(mu1_db)},
        .fso = FsoChannelParams::from_rytov(db_to_linear(mu2_db), rytov_var),
        .vlc =
            VlcGeometry{
                .height_m = L_m,
                .phi_half = deg_to_rad(phi_half_deg),
                .psi_fov = deg_to_rad(psi_fov_deg),
                .area_m2 = area_m2,
                .responsivity = responsivity,
                .filter_gain = filter_gain,
                .ref_index = ref_index,
                .eta = eta,
                .n0_w_per_hz = n0_w_per_hz,
                .bandwidth_hz = bandwidth_hz,
                .pt_w = pt_w,
                .n_leds = static_cast<int>(std::clamp(n_leds, -1.0, 1e9)),
            },
        .gamma_th = db_to_linear(gamma_th_db),
    };
    s.validate();
    return s;
  }
};

struct ScenarioField {
  std::string_view key;
  double ScenarioConfig::*member;
};

inline constexpr ScenarioField kScenarioFields[] = {
    {"rf.mu1_db", &ScenarioConfig::mu1_db},
    {"fso.mu2_db", &ScenarioConfig::mu2_db},
    {"fso.rytov_var", &ScenarioConfig::rytov_var},
    {"vlc.L_m", &ScenarioConfig::L_m},
    {"vlc.phi_half_deg", &ScenarioConfig::phi_half_deg},
    {"vlc.psi_fov_deg", &ScenarioConfig::psi_fov_deg},
    {"vlc.area_m2", &ScenarioConfig::area_m2},
    {"vlc.responsivity", &ScenarioConfig::responsivity},
    {"vlc.filter_gain", &ScenarioConfig::filter_gain},
    {"vlc.ref_index", &ScenarioConfig::ref_index},
    {"vlc.eta", &ScenarioConfig::eta},
    {"vlc.n0_w_per_hz", &ScenarioConfig::n0_w_per_hz},
    {"vlc.bandwidth_hz", &ScenarioConfig::bandwidth_hz},
    {"vlc.pt_w", &ScenarioConfig::pt_w},
    {"vlc.n_leds", &ScenarioConfig::n_leds},
    {"run.gamma_th_db", &ScenarioConfig::gamma_th_db},
};

/// Resolves "section.key" or an unambiguous bare key ("pt_w") to its field.
inline const ScenarioField* find_scenario_field(std::string_view key) {
  for (const auto& f : kScenarioFields) {
    if (f.key == key) return &f;
  }
  const ScenarioField* match = nullptr;
  for (const auto& f : kScenarioFields) {
    const auto dot = f.key.find('.');
    if (f.key.substr(dot + 1) == key) {
      if (match != nullptr) return nullptr;
      match = &f;
    }
  }
  return match;
}

/// Sets one scenario value; "mu_db" sets mu1_db and mu2_db together.
inline void set_scenario_value(ScenarioConfig& c, std::string_view key, double v) {
  if (key == "mu_db") {
    c.mu1_db = v;
    c.mu2_db = v;
    return;
  }
  const auto* f = find_scenario_field(key);
  if (f == nullptr) throw ConfigError("unknown scenario key '" + std::string(key) + "'");
  c.*(f->member) = v;
}

struct RunConfig {
  mc::McConfig mc{.samples = 0};
};

struct AxisRange {
  std::string key = "mu_db";
  double start = 0.0;
  double stop = 60.0;
  double step = 5.0;

  std::vector<double> points() const {
    if (!(step > 0.0) || !std::isfinite(step)) throw ConfigError("sweep.step: must be positive");
    if (!(stop >= start)) throw ConfigError("sweep.stop: must not be below sweep.start");
    const auto n = static_cast<std::int64_t>(std::floor((stop - start) / step + 1e-9));
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n + 1));
    for (std::int64_t k = 0; k <= n; ++k) out.push_back(start + static_cast<double>(k) * step);
    return out;
  }
};

struct VaryList {
  std::string key;
  std::vector<double> values;
};

/// Sweep description: one axis plus the cartesian product of the vary lists
/// (first-declared list outermost).
struct SweepSpec {
  AxisRange axis;
  std::vector<VaryList> vary;
  bool baseline_fso_only = false;
};

struct FileConfig {
  ScenarioConfig scenario;
  RunConfig run;
  SweepSpec sweep;
};

inline std::vector<double> parse_number_list(std::string_view text, std::string_view key) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    out.push_back(parse_number(item, key));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline std::uint64_t parse_count(std::string_view text, std::string_view key) {
  const double v = parse_number(text, key);
  if (v < 0.0 || v != std::floor(v) || v > 1.8e19) {
    throw ConfigError(std::string(key) + ": expected a non-negative integer");
  }
  return static_cast<std::uint64_t>(v);
}

inline FileConfig interpret_config(const ConfigDocument& doc) {
  FileConfig cfg;
  for (const auto& e : doc.entries) {
    const std::string& k = e.key;
    const auto at = "line " + std::to_string(e.line) + ": ";
    try {
      if (k.starts_with("sweep.vary.")) {
        const auto target = k.substr(std::string_view("sweep.vary.").size());
        if (target != "mu_db" && find_scenario_field(target) == nullptr) {
          throw ConfigError(k + ": unknown scenario key '" + target + "'");
        }
        cfg.sweep.vary.push_back({target, parse_number_list(e.value, k)});
      } else if (k == "sweep.axis") {
        if (e.value != "mu_db" && find_scenario_field(e.value) == nullptr) {
          throw ConfigError(k + ": unknown axis '" + e.value + "'");
        }
        cfg.sweep.axis.key = e.value;
      } else if (k == "sweep.start") {
        cfg.sweep.axis.start = parse_number(e.value, k);
      } else if (k == "sweep.stop") {
        cfg.sweep.axis.stop = parse_number(e.value, k);
      } else if (k == "sweep.step") {
        cfg.sweep.axis.step = parse_number(e.value, k);
      } else if (k == "sweep.fso_only_baseline") {
        cfg.sweep.baseline_fso_only = parse_bool(e.value, k);
      } else if (k == "run.samples") {
        cfg.run.mc.samples = parse_count(e.value, k);
      } else if (k == "run.seed") {
        cfg.run.mc.seed = parse_count(e.value, k);
      } else if (k == "run.batch") {
        cfg.run.mc.batch = parse_count(e.value, k);
      } else if (k == "run.threads") {
        cfg.run.mc.threads = static_cast<unsigned>(parse_count(e.value, k));
      } else if (const auto* f = find_scenario_field(k); f != nullptr && f->key == k) {
        cfg.scenario.*(f->member) = parse_number(e.value, k);
      } else {
        throw ConfigError("unknown key '" + k + "'");
      }
    } catch (const ConfigError& err) {
      throw ConfigError(at + err.what());
    }
  }
  return cfg;
}

}  // namespace rfvlc::cli

#endif  // RFVLC_CLI_CONFIG_HPP
