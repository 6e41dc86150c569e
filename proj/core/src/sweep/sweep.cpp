// Copyright (c) 2026 the rfuwoc authors
// SPDX-License-Identifier: Apache-2.0
#include "rfuwoc/sweep/sweep.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace rfuwoc::sweep {

void SweepSpec::validate() const {
  scenario.validate();
  if (!(step_db > 0.0)) {
    throw std::invalid_argument("SweepSpec: step_db must be > 0");
  }
  if (!(start_db < stop_db)) {
    throw std::invalid_argument("SweepSpec: start_db must be < stop_db");
  }
  if (methods.empty()) {
    throw std::invalid_argument("SweepSpec: methods must be non-empty");
  }
  if (methods.count(Method::kMc) && !mc.has_value()) {
    throw std::invalid_argument(
        "SweepSpec: mc method requested without an mc config");
  }
  if (mc.has_value()) {
    mc->validate();
  }
}

std::vector<double> SweepSpec::grid() const {
  std::vector<double> g;
  // Half-step slack absorbs accumulated rounding at the stop end.
  for (double v = start_db; v <= stop_db + 0.5 * step_db; v += step_db) {
    g.push_back(v);
  }
  return g;
}

namespace {

void append_flag(std::string& flags, const std::string& item) {
  if (flags == "ok") {
    flags = item;
  } else {
    flags += "|" + item;
  }
}

SweepRow evaluate_point(const SweepSpec& spec, double axis_db) {
  SweepRow row;
  row.axis_db = axis_db;
  const double lin = secrecy::db_to_linear(axis_db);
  const secrecy::SecrecyScenario s =
      spec.axis == SweepAxis::kMainSnrDb
          ? spec.scenario.with_main_snr(lin)
          : spec.scenario.with_eve_snr(lin);

  if (spec.methods.count(Method::kExact)) {
    const auto r = secrecy::sop_exact(s, spec.contours);
    row.sop_exact = r.value;
    if (!r.converged) append_flag(row.flags, "exact:not_converged");
  }
  if (spec.methods.count(Method::kAsymptotic)) {
    const auto r = spec.axis == SweepAxis::kMainSnrDb
                       ? secrecy::sop_asymptotic_main(s)
                       : secrecy::sop_asymptotic_eve(s);
    row.sop_asymptotic = r.value;
    if (!r.converged) append_flag(row.flags, "asymptotic:not_converged");
    if (!r.in_domain) append_flag(row.flags, "asymptotic:out_of_domain");
  }
  if (spec.methods.count(Method::kSaturation)) {
    const auto r = secrecy::sop_saturation(s);
    row.sop_saturation = r.value;
    if (!r.converged) append_flag(row.flags, "saturation:not_converged");
  }
  if (spec.methods.count(Method::kOracle)) {
    const auto r = secrecy::sop_oracle(s, spec.oracle_tol);
    row.sop_oracle = r.value;
    if (!r.converged) append_flag(row.flags, "oracle:not_converged");
  }
  if (spec.methods.count(Method::kMc)) {
    mc::McConfig cfg = *spec.mc;
    const auto est = mc::simulate_sop(s, cfg);
    row.sop_mc = est.sop_hat;
    row.mc_ci_low = est.ci_low;
    row.mc_ci_high = est.ci_high;
  }
  return row;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec) {
  spec.validate();
  const std::vector<double> grid = spec.grid();
  SweepResult result;
  result.rows.resize(grid.size());

  unsigned n_threads = spec.threads != 0
                           ? spec.threads
                           : std::max(1u, std::thread::hardware_concurrency());
  n_threads = static_cast<unsigned>(
      std::min<std::size_t>(n_threads, grid.size()));
  if (spec.methods.count(Method::kMc)) {
    // The Monte Carlo stage parallelizes internally across chunks; keep the
    // grid serial to avoid oversubscription.
    n_threads = 1;
  }

  if (n_threads <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      result.rows[i] = evaluate_point(spec, grid[i]);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) {
      workers.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= grid.size()) return;
          result.rows[i] = evaluate_point(spec, grid[i]);
        }
      });
    }
    for (auto& w : workers) w.join();
  }

  for (const SweepRow& row : result.rows) {
    if (row.flags != "ok") result.all_converged = false;
  }
  return result;
}

Method method_from_name(const std::string& name) {
  if (name == "exact") return Method::kExact;
  if (name == "asymptotic") return Method::kAsymptotic;
  if (name == "saturation") return Method::kSaturation;
  if (name == "oracle") return Method::kOracle;
  if (name == "mc") return Method::kMc;
  throw std::invalid_argument("unknown method name: " + name);
}

std::string method_name(Method m) {
  switch (m) {
    case Method::kExact: return "exact";
    case Method::kAsymptotic: return "asymptotic";
    case Method::kSaturation: return "saturation";
    case Method::kOracle: return "oracle";
    case Method::kMc: return "mc";
  }
  return "?";
}

}  // namespace rfuwoc::sweep
