#pragma once
#ifndef RFVLC_MC_ENGINE_HPP
#define RFVLC_MC_ENGINE_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "rfvlc/mc/philox.hpp"
#include "rfvlc/mc/samplers.hpp"
#include "rfvlc/scenario.hpp"

namespace rfvlc::mc {

struct McConfig {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  std::uint64_t batch = 65'536;  // samples per substream
  unsigned threads = 1;          // 0 = hardware concurrency

  void validate() const {
    if (samples < 1) throw ValidationError("run.samples", "must be at least 1");
    if (batch < 1) throw ValidationError("run.batch", "must be at least 1");
  }
};

struct McEstimate {
  double p_hat = 0.0;
  double half_width_95 = 0.0;  // normal approximation, 1.96 sigma
  std::uint64_t n = 0;
  std::uint64_t events = 0;
};

inline McEstimate binomial_estimate(std::uint64_t events, std::uint64_t n) {
  const double nd = static_cast<double>(n);
  const double p = static_cast<double>(events) / nd;
  return {p, 1.96 * std::sqrt(p * (1.0 - p) / nd), n, events};
}

/// Runs count(rng, n) on every substream and sums the counts.  Substream i
/// covers samples [i*batch, min((i+1)*batch, samples)) and draws from
/// Philox4x32(seed, i), so the total is independent of the thread count.
template <typename CountFn>
std::uint64_t run_substreams(const McConfig& cfg, CountFn&& count) {
  cfg.validate();
  const std::uint64_t streams = (cfg.samples + cfg.batch - 1) / cfg.batch;
  std::vector<std::uint64_t> counts(streams, 0);
  std::atomic<std::uint64_t> next{0};
  const auto worker = [&] {
    for (std::uint64_t i = next.fetch_add(1); i < streams; i = next.fetch_add(1)) {
      const std::uint64_t begin = i * cfg.batch;
      const std::uint64_t n = std::min(cfg.batch, cfg.samples - begin);
      Philox4x32 rng(cfg.seed, i);
      counts[i] = count(rng, n);
    }
  };
  unsigned threads = cfg.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.threads;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, streams));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  std::uint64_t total = 0;
  for (const auto c : counts) total += c;
  return total;
}

/// Simulates min(max(g_rf, g_fso), g_vlc_best) < gamma_th directly.
inline McEstimate estimate_outage(const LinkBudgetScenario& s, const McConfig& cfg) {
  s.validate();
  const auto vlc = VlcModel::make(s.vlc);
  const auto events = run_substreams(cfg, [&](Philox4x32& rng, std::uint64_t n) {
    std::uint64_t outages = 0;
    for (std::uint64_t k = 0; k < n; ++k) {
      const double g1 = std::max(sample_rf_snr(rng, s.rf), sample_fso_snr(rng, s.fso.mu2, s.fso.shape));
      const double g2 = sample_vlc_best_snr(rng, vlc);
      if (std::min(g1, g2) < s.gamma_th) ++outages;
    }
    return outages;
  });
  return binomial_estimate(events, cfg.samples);
}

}  // namespace rfvlc::mc

#endif  // RFVLC_MC_ENGINE_HPP
