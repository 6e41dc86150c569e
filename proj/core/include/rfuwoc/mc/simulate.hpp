// Copyright (c) 2026 the rfuwoc authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>

#include "rfuwoc/mc/rng.hpp"
#include "rfuwoc/secrecy/scenario.hpp"

namespace rfuwoc::mc {

enum class OutageMode {
  /// Count trials with log2((1 + min(g1,g2)) / (1 + ge)) <= rate_s
  /// (secrecy capacity floored at zero).
  kExactDefinition,
  /// Count trials with min(g1, g2) <= Theta * ge.
  kLowerBound,
};

struct McConfig {
  std::uint64_t trials = 10'000'000;
  std::uint64_t master_seed = 0x5eed'0000'0001ull;
  /// Trials per stream; fixed chunking makes the tally independent of the
  /// number of worker threads.
  std::uint64_t chunk_size = 1u << 16;
  OutageMode mode = OutageMode::kLowerBound;
  /// 0 = use all hardware threads.
  unsigned threads = 0;

  void validate() const;
};

struct McEstimate {
  double sop_hat = 0.0;
  double ci_low = 0.0;   // 95% Wilson interval
  double ci_high = 1.0;
  std::uint64_t trials_used = 0;
  std::uint64_t outages = 0;
};

/// Monte Carlo secrecy outage estimate. Deterministic for a fixed
/// (master_seed, trials, chunk_size) triple regardless of thread count.
McEstimate simulate_sop(const secrecy::SecrecyScenario& scenario,
                        const McConfig& cfg);

struct KsReport {
  double statistic = 0.0;
  double critical = 0.0;  // 1% significance level
  bool pass = false;
  std::uint64_t samples = 0;
};

/// Two-sided Kolmogorov-Smirnov test of a sampler against an analytic CDF.
KsReport ks_validate(const std::function<double(Stream&)>& sampler,
                     const std::function<double(double)>& cdf,
                     std::uint64_t n, Stream& stream);

/// Wilson 95% score interval for k successes in n trials.
McEstimate wilson_interval(std::uint64_t outages, std::uint64_t trials);

}  // namespace rfuwoc::mc
