// Copyright (c) 2026 the rfuwoc authors
// SPDX-License-Identifier: Apache-2.0
#include "rfuwoc/mc/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace rfuwoc::mc {

void McConfig::validate() const {
  if (trials == 0) {
    throw std::invalid_argument("McConfig: trials must be positive");
  }
  if (chunk_size == 0) {
    throw std::invalid_argument("McConfig: chunk_size must be positive");
  }
}

McEstimate wilson_interval(std::uint64_t outages, std::uint64_t trials) {
  constexpr double z = 1.959963984540054;  // 97.5% normal quantile
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(outages) / n;
  const double z2n = z * z / n;
  const double denom = 1.0 + z2n;
  const double center = (p + 0.5 * z2n) / denom;
  const double half =
      z * std::sqrt(p * (1.0 - p) / n + 0.25 * z2n / n) / denom;
  McEstimate est;
  est.sop_hat = p;
  est.ci_low = std::max(0.0, center - half);
  est.ci_high = std::min(1.0, center + half);
  est.trials_used = trials;
  est.outages = outages;
  return est;
}

McEstimate simulate_sop(const secrecy::SecrecyScenario& scenario,
                        const McConfig& cfg) {
  cfg.validate();
  scenario.validate();

  const double theta = scenario.theta();
  const bool lower_bound = cfg.mode == OutageMode::kLowerBound;
  const std::uint64_t n_chunks =
      (cfg.trials + cfg.chunk_size - 1) / cfg.chunk_size;
  std::vector<std::uint64_t> chunk_outages(n_chunks, 0);

  auto run_chunk = [&](std::uint64_t chunk) {
    const std::uint64_t begin = chunk * cfg.chunk_size;
    const std::uint64_t count = std::min(cfg.chunk_size, cfg.trials - begin);
    Stream stream(cfg.master_seed, chunk);
    std::uint64_t outages = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
      const double g1 = channels::alpha_mu_sample(scenario.main_rf, stream);
      const double g2 = channels::egg_sample(scenario.uwoc, stream);
      const double ge =
          channels::alpha_mu_sample(scenario.eavesdropper_rf, stream);
      const double geq = std::min(g1, g2);
      const bool outage = lower_bound ? (geq <= theta * ge)
                                      : (1.0 + geq <= theta * (1.0 + ge));
      outages += outage ? 1u : 0u;
    }
    chunk_outages[chunk] = outages;
  };

  unsigned n_threads = cfg.threads != 0
                           ? cfg.threads
                           : std::max(1u, std::thread::hardware_concurrency());
  n_threads = static_cast<unsigned>(
      std::min<std::uint64_t>(n_threads, n_chunks));
  if (n_threads <= 1) {
    for (std::uint64_t chunk = 0; chunk < n_chunks; ++chunk) {
      run_chunk(chunk);
    }
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) {
      workers.emplace_back([&] {
        for (;;) {
          const std::uint64_t chunk = next.fetch_add(1);
          if (chunk >= n_chunks) return;
          run_chunk(chunk);
        }
      });
    }
    for (auto& w : workers) w.join();
  }

  // Order-fixed integer tally: identical for any thread count.
  std::uint64_t outages = 0;
  for (std::uint64_t c : chunk_outages) outages += c;
  return wilson_interval(outages, cfg.trials);
}

KsReport ks_validate(const std::function<double(Stream&)>& sampler,
                     const std::function<double(double)>& cdf,
                     std::uint64_t n, Stream& stream) {
  if (n == 0) {
    throw std::invalid_argument("ks_validate: n must be positive");
  }
  std::vector<double> xs(n);
  for (auto& x : xs) x = sampler(stream);
  std::sort(xs.begin(), xs.end());
  double d = 0.0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const double f = cdf(xs[i]);
    d = std::max(d, f - static_cast<double>(i) / static_cast<double>(n));
    d = std::max(d, static_cast<double>(i + 1) / static_cast<double>(n) - f);
  }
  // Asymptotic critical value at the 1% level with the Stephens small-n
  // correction; c(0.01) = sqrt(-ln(0.005)/2).
  const double c01 = 1.6276236115189502;
  const double sn = std::sqrt(static_cast<double>(n));
  KsReport report;
  report.statistic = d;
  report.critical = c01 / (sn + 0.12 + 0.11 / sn);
  report.pass = d < report.critical;
  report.samples = n;
  return report;
}

}  // namespace rfuwoc::mc
