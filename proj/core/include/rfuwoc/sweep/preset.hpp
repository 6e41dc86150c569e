// Copyright (c) 2026 the rfuwoc authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "rfuwoc/sweep/sweep.hpp"

namespace rfuwoc::sweep {

/// Schema violation; the message names the offending key.
class PresetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One named curve of a preset: a fully resolved sweep specification.
struct PresetCurve {
  std::string label;
  std::string water_label;
  SweepSpec spec;
};

struct Preset {
  std::string name;
  std::string description;
  std::vector<PresetCurve> curves;
};

/// Parses and validates a preset JSON document.
Preset parse_preset(const std::string& json_text);

/// Loads a preset from a file path.
Preset load_preset_file(const std::string& path);

/// Resolves a preset name or path: anything that names an existing file is
/// used as-is, otherwise "<dir>/<name>.json" is tried for each search
/// directory (RFUWOC_PRESET_DIR when set, then ./presets).
std::string resolve_preset_path(const std::string& name_or_path);

}  // namespace rfuwoc::sweep
