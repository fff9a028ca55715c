// rfvlc: outage analysis of an RF/FSO -> VLC decode-and-forward relay.
//
//   rfvlc point    --config scenario.ini [--samples N] [--seed S] [--format csv|json]
//   rfvlc sweep    --config sweep.ini --out curves.csv [--samples N] [--fso-only-baseline]
//   rfvlc validate --config scenario.ini [--samples N]
//
// Exit codes: 0 success, 2 configuration error, 3 validation failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rfvlc/cli/config.hpp"
#include "rfvlc/cli/report.hpp"
#include "rfvlc/cli/sweep.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitValidation = 3;

struct CommonOptions {
  std::string config_path;
  std::string out_path;
  std::string format;  // empty: text for point, csv for sweep
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> batch;
  std::optional<unsigned> threads;
  bool fso_only_baseline = false;
  double inject_analytic_scale = 1.0;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--config", o.config_path, "Scenario file (INI)")->required()->check(CLI::ExistingFile);
  cmd->add_option("--out", o.out_path, "Write output here instead of stdout");
  cmd->add_option("--samples", o.samples, "Monte Carlo samples per point (0 disables)");
  cmd->add_option("--seed", o.seed, "Monte Carlo seed");
  cmd->add_option("--batch", o.batch, "Samples per RNG substream");
  cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  cmd->add_option("--format", o.format, "Output format: text (point only), csv, json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
}

rfvlc::cli::FileConfig load(const CommonOptions& o) {
  auto cfg = rfvlc::cli::interpret_config(rfvlc::cli::load_config(o.config_path));
  if (o.samples) cfg.run.mc.samples = *o.samples;
  if (o.seed) cfg.run.mc.seed = *o.seed;
  if (o.batch) cfg.run.mc.batch = *o.batch;
  if (o.threads) cfg.run.mc.threads = *o.threads;
  if (o.fso_only_baseline) cfg.sweep.baseline_fso_only = true;
  if (cfg.run.mc.samples > 0) cfg.run.mc.validate();
  return cfg;
}

// Whole output is rendered before this is called; the file appears complete or not at all.
void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  const std::filesystem::path target(out_path);
  auto tmp = target;
  tmp += ".partial";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << text;
    if (!out) throw std::runtime_error("write to '" + tmp.string() + "' failed");
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Outage probability of a hybrid RF/FSO to multi-LED VLC decode-and-forward relay"};
  app.require_subcommand(1);

  CommonOptions opt;
  auto* point = app.add_subcommand("point", "Analytic outage (and optional Monte Carlo) for one scenario");
  add_common(point, opt);

  auto* sweep = app.add_subcommand("sweep", "Sweep one axis over every variant, emit CSV/JSON rows");
  add_common(sweep, opt);
  sweep->add_flag("--fso-only-baseline", opt.fso_only_baseline, "Also compute the FSO-only comparison system");

  auto* validate = app.add_subcommand("validate", "Check boundary invariants and analytic vs Monte Carlo");
  add_common(validate, opt);
  validate->add_option("--inject-analytic-scale", opt.inject_analytic_scale)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    auto cfg = load(opt);
    if (point->parsed()) {
      const auto report = rfvlc::cli::run_point(cfg.scenario, cfg.run.mc);
      if (opt.format == "json") {
        emit(rfvlc::cli::point_to_json(report).dump(2) + "\n", opt.out_path);
      } else if (opt.format == "csv") {
        rfvlc::cli::SweepRow row{report.inputs, report.outage.p_out, report.outage.p_out_fso_only,
                                 report.outage.floor, report.mc};
        emit(rfvlc::cli::format_csv({row}), opt.out_path);
      } else {
        emit(rfvlc::cli::point_to_text(report), opt.out_path);
      }
    } else if (sweep->parsed()) {
      const auto rows = rfvlc::cli::run_sweep(cfg);
      emit(opt.format == "json" ? rfvlc::cli::format_json(rows) : rfvlc::cli::format_csv(rows), opt.out_path);
    } else if (validate->parsed()) {
      if (cfg.run.mc.samples == 0) cfg.run.mc.samples = 1'000'000;
      const auto checks = rfvlc::cli::run_validate(cfg.scenario, cfg.run.mc, {opt.inject_analytic_scale});
      emit(rfvlc::cli::format_checks(checks), opt.out_path);
      for (const auto& c : checks) {
        if (!c.pass) return kExitValidation;
      }
    }
  } catch (const rfvlc::cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const rfvlc::ValidationError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
