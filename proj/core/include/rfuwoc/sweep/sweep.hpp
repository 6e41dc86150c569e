// Copyright (c) 2026 the rfuwoc authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rfuwoc/mc/simulate.hpp"
#include "rfuwoc/secrecy/sop.hpp"

namespace rfuwoc::sweep {

enum class SweepAxis { kMainSnrDb, kEveSnrDb };

enum class Method { kExact, kAsymptotic, kSaturation, kOracle, kMc };

/// One sweep: a scenario template, the axis swept in dB, the grid and the
/// set of evaluation methods. The asymptotic method follows the sweep axis
/// (high main SNR on the main axis, high eavesdropper SNR on the other).
struct SweepSpec {
  secrecy::SecrecyScenario scenario;
  SweepAxis axis = SweepAxis::kMainSnrDb;
  double start_db = -20.0;
  double stop_db = 40.0;
  double step_db = 1.0;
  std::set<Method> methods = {Method::kExact};
  std::optional<mc::McConfig> mc;
  double oracle_tol = 1e-9;
  secrecy::ExactContours contours{};
  /// 0 = all hardware threads; grid points fan out across workers.
  unsigned threads = 0;

  void validate() const;
  std::vector<double> grid() const;
};

struct SweepRow {
  double axis_db = 0.0;
  std::optional<double> sop_exact;
  std::optional<double> sop_asymptotic;
  std::optional<double> sop_saturation;
  std::optional<double> sop_oracle;
  std::optional<double> sop_mc;
  std::optional<double> mc_ci_low;
  std::optional<double> mc_ci_high;
  /// "ok", or a '|'-separated list of per-method conditions.
  std::string flags = "ok";
};

struct SweepResult {
  std::vector<SweepRow> rows;
  bool all_converged = true;
};

/// Evaluates every requested method at every grid point. Grid points are
/// independent and processed by a worker pool; output ordering follows the
/// axis values. Per-point convergence failures are recorded in the row
/// flags rather than thrown.
SweepResult run_sweep(const SweepSpec& spec);

Method method_from_name(const std::string& name);
std::string method_name(Method m);

}  // namespace rfuwoc::sweep
