// Copyright (c) 2026 the rfuwoc authors
// SPDX-License-Identifier: Apache-2.0
//
// Batch front-end for the secrecy outage library: runs SNR sweeps from
// preset files and emits CSV curves.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rfuwoc/sweep/csv.hpp"
#include "rfuwoc/sweep/preset.hpp"

namespace {

using rfuwoc::sweep::Preset;

// "out.csv" -> "out.<label>.csv" when a preset carries several curves.
std::string curve_out_path(const std::string& base, const std::string& label,
                           bool single_curve) {
  if (single_curve) return base;
  std::filesystem::path p(base);
  const std::string stem = p.stem().string();
  const std::string ext = p.extension().string();
  std::string safe_label;
  for (char ch : label) {
    safe_label += (std::isalnum(static_cast<unsigned char>(ch)) || ch == '.' ||
                   ch == '-' || ch == '_')
                      ? ch
                      : '_';
  }
  p.replace_filename(stem + "." + safe_label + (ext.empty() ? ".csv" : ext));
  return p.string();
}

int run_sweep_cmd(const std::string& preset_arg,
                  const std::vector<std::string>& methods,
                  std::uint64_t trials, std::uint64_t seed,
                  const std::string& out, bool strict, unsigned threads) {
  const Preset preset = rfuwoc::sweep::load_preset_file(
      rfuwoc::sweep::resolve_preset_path(preset_arg));
  bool any_failure = false;
  const bool single = preset.curves.size() == 1;
  for (const auto& curve : preset.curves) {
    rfuwoc::sweep::SweepSpec spec = curve.spec;
    if (!methods.empty()) {
      spec.methods.clear();
      for (const auto& m : methods) {
        spec.methods.insert(rfuwoc::sweep::method_from_name(m));
      }
    }
    if (spec.methods.count(rfuwoc::sweep::Method::kMc)) {
      if (!spec.mc.has_value()) {
        std::cerr << "error: preset has no mc config but mc was requested\n";
        return 2;
      }
      if (trials != 0) spec.mc->trials = trials;
      if (seed != 0) spec.mc->master_seed = seed;
    }
    spec.threads = threads;
    spec.validate();

    const auto result = rfuwoc::sweep::run_sweep(spec);
    const std::string path = curve_out_path(out, curve.label, single);
    rfuwoc::sweep::emit_csv(result, path);
    std::cout << "wrote " << path << " (" << result.rows.size()
              << " rows)" << (result.all_converged ? "" : " [flags]")
              << "\n";
    any_failure = any_failure || !result.all_converged;
  }
  return (strict && any_failure) ? 1 : 0;
}

int run_validate_cmd(const std::string& preset_arg) {
  try {
    const Preset preset = rfuwoc::sweep::load_preset_file(
        rfuwoc::sweep::resolve_preset_path(preset_arg));
    std::cout << "ok: preset '" << preset.name << "' with "
              << preset.curves.size() << " curve(s)\n";
    return 0;
  } catch (const rfuwoc::sweep::PresetError& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return 1;
  }
}

int run_optimal_power_cmd(const std::string& preset_arg, double eps) {
  const Preset preset = rfuwoc::sweep::load_preset_file(
      rfuwoc::sweep::resolve_preset_path(preset_arg));
  int rc = 0;
  for (const auto& curve : preset.curves) {
    const auto& spec = curve.spec;
    if (spec.axis != rfuwoc::sweep::SweepAxis::kMainSnrDb) {
      std::cerr << curve.label
                << ": optimal-power requires a main-axis sweep preset\n";
      rc = 2;
      continue;
    }
    try {
      const double db = rfuwoc::secrecy::optimal_transmit_power(
          spec.scenario, eps, spec.grid(), spec.contours);
      const auto at = rfuwoc::secrecy::sop_exact(
          spec.scenario.with_main_snr(rfuwoc::secrecy::db_to_linear(db)),
          spec.contours);
      std::printf("%s: optimal main-link mean SNR = %g dB (SOP %.6g)\n",
                  curve.label.c_str(), db, at.value);
    } catch (const rfuwoc::secrecy::NoSaturationOnGrid& e) {
      std::cerr << curve.label << ": " << e.what() << "\n";
      rc = 1;
    }
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secrecy outage curves for two-hop RF/underwater-optical "
               "links"};
  app.require_subcommand(1);

  std::string preset;
  std::vector<std::string> methods;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::string out = "sweep.csv";
  bool strict = false;
  unsigned threads = 0;

  auto* sweep = app.add_subcommand("sweep", "Run a preset SNR sweep");
  sweep->add_option("--preset", preset, "Preset name or path")->required();
  sweep->add_option("--methods", methods,
                    "Subset of exact,asymptotic,saturation,oracle,mc")
      ->delimiter(',');
  sweep->add_option("--trials", trials, "Override Monte Carlo trials");
  sweep->add_option("--seed", seed, "Override Monte Carlo master seed");
  sweep->add_option("--out", out, "Output CSV path");
  sweep->add_option("--threads", threads, "Worker threads (0 = all)");
  sweep->add_flag("--strict", strict,
                  "Exit nonzero if any method failed to converge");

  auto* validate = app.add_subcommand("validate", "Schema-check a preset");
  validate->add_option("--preset", preset, "Preset name or path")->required();

  double eps = 0.05;
  auto* opt = app.add_subcommand(
      "optimal-power",
      "Smallest main-link SNR within eps of the outage floor");
  opt->add_option("--preset", preset, "Preset name or path")->required();
  opt->add_option("--eps", eps, "Relative distance to the floor");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep->parsed()) {
      return run_sweep_cmd(preset, methods, trials, seed, out, strict,
                           threads);
    }
    if (validate->parsed()) {
      return run_validate_cmd(preset);
    }
    if (opt->parsed()) {
      return run_optimal_power_cmd(preset, eps);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
