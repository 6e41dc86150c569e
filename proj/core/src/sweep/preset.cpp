// Copyright (c) 2026 the rfuwoc authors
// SPDX-License-Identifier: Apache-2.0
#include "rfuwoc/sweep/preset.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace rfuwoc::sweep {

namespace {

using nlohmann::json;

const json& require(const json& j, const std::string& key,
                    const std::string& context) {
  if (!j.is_object() || !j.contains(key)) {
    throw PresetError("preset: missing key '" + context + key + "'");
  }
  return j.at(key);
}

double require_number(const json& j, const std::string& key,
                      const std::string& context) {
  const json& v = require(j, key, context);
  if (!v.is_number()) {
    throw PresetError("preset: key '" + context + key +
                      "' must be a number");
  }
  return v.get<double>();
}

std::string require_string(const json& j, const std::string& key,
                           const std::string& context) {
  const json& v = require(j, key, context);
  if (!v.is_string()) {
    throw PresetError("preset: key '" + context + key +
                      "' must be a string");
  }
  return v.get<std::string>();
}

double optional_number(const json& j, const std::string& key,
                       const std::string& context, double fallback) {
  if (!j.contains(key)) return fallback;
  return require_number(j, key, context);
}

}  // namespace

Preset parse_preset(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw PresetError(std::string("preset: invalid JSON: ") + e.what());
  }

  Preset preset;
  preset.name = require_string(j, "name", "");
  if (j.contains("description")) {
    preset.description = require_string(j, "description", "");
  }

  const json& rf = require(j, "rf", "");
  const double alpha = require_number(rf, "alpha", "rf.");
  const double mu = require_number(rf, "mu", "rf.");
  const double alpha_e = require_number(rf, "alpha_e", "rf.");
  const double mu_e = require_number(rf, "mu_e", "rf.");

  const double rate_s = require_number(j, "secrecy_rate", "");
  const json& detection_j = require(j, "detection", "");
  if (!detection_j.is_number_integer()) {
    throw PresetError("preset: key 'detection' must be an integer (1 or 2)");
  }
  const int detection = detection_j.get<int>();
  const double main_db = require_number(j, "main_snr_db", "");
  const double eve_db = require_number(j, "eve_snr_db", "");
  const double uwoc_db = require_number(j, "uwoc_snr_db", "");

  const json& sweep_j = require(j, "sweep", "");
  const std::string axis = require_string(sweep_j, "axis", "sweep.");
  if (axis != "main" && axis != "eve") {
    throw PresetError("preset: key 'sweep.axis' must be 'main' or 'eve'");
  }
  const double start_db = require_number(sweep_j, "start_db", "sweep.");
  const double stop_db = require_number(sweep_j, "stop_db", "sweep.");
  const double step_db = require_number(sweep_j, "step_db", "sweep.");

  const json& methods_j = require(j, "methods", "");
  if (!methods_j.is_array() || methods_j.empty()) {
    throw PresetError("preset: key 'methods' must be a non-empty array");
  }
  std::set<Method> methods;
  for (const json& m : methods_j) {
    if (!m.is_string()) {
      throw PresetError("preset: entries of 'methods' must be strings");
    }
    try {
      methods.insert(method_from_name(m.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw PresetError(std::string("preset: ") + e.what());
    }
  }

  std::optional<mc::McConfig> mc_cfg;
  if (j.contains("mc")) {
    const json& mc_j = j.at("mc");
    mc::McConfig cfg;
    cfg.trials = static_cast<std::uint64_t>(
        require_number(mc_j, "trials", "mc."));
    cfg.master_seed = static_cast<std::uint64_t>(
        require_number(mc_j, "seed", "mc."));
    cfg.chunk_size = static_cast<std::uint64_t>(
        optional_number(mc_j, "chunk_size", "mc.", 1 << 16));
    cfg.mode = mc::OutageMode::kLowerBound;
    if (mc_j.contains("mode")) {
      const std::string mode = require_string(mc_j, "mode", "mc.");
      if (mode == "exact_definition") {
        cfg.mode = mc::OutageMode::kExactDefinition;
      } else if (mode == "lower_bound") {
        cfg.mode = mc::OutageMode::kLowerBound;
      } else {
        throw PresetError(
            "preset: key 'mc.mode' must be 'exact_definition' or "
            "'lower_bound'");
      }
    }
    mc_cfg = cfg;
  }
  if (methods.count(Method::kMc) && !mc_cfg.has_value()) {
    throw PresetError(
        "preset: methods include 'mc' but key 'mc' is missing");
  }

  const json& water_j = require(j, "water", "");
  if (!water_j.is_object() || water_j.empty()) {
    throw PresetError("preset: key 'water' must be a non-empty object");
  }
  std::map<std::string, channels::WaterParams> waters;
  for (const auto& [label, wj] : water_j.items()) {
    const std::string ctx = "water['" + label + "'].";
    channels::WaterParams wp;
    wp.omega = require_number(wj, "omega", ctx);
    wp.lambda = require_number(wj, "lambda", ctx);
    wp.a = require_number(wj, "a", ctx);
    wp.b = require_number(wj, "b", ctx);
    wp.c = require_number(wj, "c", ctx);
    if (waters.count(label)) {
      throw PresetError("preset: duplicate water label '" + label + "'");
    }
    waters.emplace(label, wp);
  }

  const json& curves_j = require(j, "curves", "");
  if (!curves_j.is_array() || curves_j.empty()) {
    throw PresetError("preset: key 'curves' must be a non-empty array");
  }
  std::set<std::string> labels;
  for (const json& cj : curves_j) {
    PresetCurve curve;
    curve.label = require_string(cj, "label", "curves[].");
    if (!labels.insert(curve.label).second) {
      throw PresetError("preset: duplicate curve label '" + curve.label +
                        "'");
    }
    curve.water_label = require_string(cj, "water", "curves[].");
    const auto it = waters.find(curve.water_label);
    if (it == waters.end()) {
      throw PresetError("preset: curve '" + curve.label +
                        "' references unknown water label '" +
                        curve.water_label + "'");
    }
    const std::string ctx = "curves['" + curve.label + "'].";
    const double c_main = optional_number(cj, "main_snr_db", ctx, main_db);
    const double c_eve = optional_number(cj, "eve_snr_db", ctx, eve_db);
    const double c_uwoc = optional_number(cj, "uwoc_snr_db", ctx, uwoc_db);
    const double c_rate = optional_number(cj, "secrecy_rate", ctx, rate_s);

    SweepSpec spec;
    try {
      spec.scenario.main_rf = channels::AlphaMuLink::make(
          alpha, mu, secrecy::db_to_linear(c_main));
      spec.scenario.eavesdropper_rf = channels::AlphaMuLink::make(
          alpha_e, mu_e, secrecy::db_to_linear(c_eve));
      spec.scenario.uwoc = channels::EggLink::make(
          it->second, detection, secrecy::db_to_linear(c_uwoc));
    } catch (const std::invalid_argument& e) {
      throw PresetError("preset: curve '" + curve.label + "': " + e.what());
    }
    spec.scenario.rate_s = c_rate;
    spec.axis = axis == "main" ? SweepAxis::kMainSnrDb : SweepAxis::kEveSnrDb;
    spec.start_db = start_db;
    spec.stop_db = stop_db;
    spec.step_db = step_db;
    spec.methods = methods;
    spec.mc = mc_cfg;
    try {
      spec.validate();
    } catch (const std::invalid_argument& e) {
      throw PresetError(std::string("preset: ") + e.what());
    }
    curve.spec = std::move(spec);
    preset.curves.push_back(std::move(curve));
  }
  return preset;
}

Preset load_preset_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) {
    throw PresetError("preset: cannot open file: " + path);
  }
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_preset(ss.str());
}

std::string resolve_preset_path(const std::string& name_or_path) {
  namespace fs = std::filesystem;
  if (fs::exists(name_or_path)) {
    return name_or_path;
  }
  std::vector<std::string> dirs;
  if (const char* env = std::getenv("RFUWOC_PRESET_DIR")) {
    dirs.emplace_back(env);
  }
  dirs.emplace_back("presets");
  for (const std::string& dir : dirs) {
    const fs::path candidate = fs::path(dir) / (name_or_path + ".json");
    if (fs::exists(candidate)) {
      return candidate.string();
    }
  }
  throw PresetError("preset: cannot resolve '" + name_or_path +
                    "' (tried literal path and <dir>/" + name_or_path +
                    ".json for RFUWOC_PRESET_DIR and ./presets)");
}

}  // namespace rfuwoc::sweep
