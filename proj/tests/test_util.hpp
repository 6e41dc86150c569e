// Copyright (c) 2026 the rfuwoc authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <vector>

#include "rfuwoc/channels/egg.hpp"
#include "rfuwoc/secrecy/scenario.hpp"

namespace rfuwoc::test {

inline double rel_err(double got, double want) {
  if (want == 0.0) return std::abs(got);
  return std::abs(got - want) / std::abs(want);
}

/// The shipped water parameter table (see presets/README.md).
inline std::vector<channels::WaterScenario> water_table() {
  return {
      {"[2.4, 0.05]", {0.2130, 0.3291, 1.4299, 1.1817, 17.1984}},
      {"[2.4, 0.10]", {0.2108, 0.3449, 1.2658, 1.1833, 35.7368}},
      {"[2.4, 0.15]", {0.2694, 0.4030, 1.2220, 1.2311, 31.3737}},
      {"[2.4, 0.20]", {0.4326, 0.4507, 1.8275, 1.3696, 8.5615}},
      {"[4.7, 0.05]", {0.4466, 0.4407, 1.1908, 1.4573, 74.1919}},
  };
}

/// The figure-1 configuration: both RF links alpha = 1.2, mu = 0.5,
/// eavesdropper and optical mean SNR at -20 dB, rate 0.5, IM/DD detection.
inline secrecy::SecrecyScenario fig1_scenario(double main_db,
                                              std::size_t water_index = 0,
                                              double eve_db = -20.0) {
  secrecy::SecrecyScenario s;
  s.main_rf = channels::AlphaMuLink::make(1.2, 0.5,
                                          std::pow(10.0, main_db / 10.0));
  s.eavesdropper_rf =
      channels::AlphaMuLink::make(1.2, 0.5, std::pow(10.0, eve_db / 10.0));
  s.uwoc = channels::EggLink::make(water_table()[water_index].params, 2,
                                   std::pow(10.0, -20.0 / 10.0));
  s.rate_s = 0.5;
  return s;
}

/// The figure-3 configuration: both RF links alpha = 0.9, mu = 1.5, main
/// link 30 dB, optical mean SNR 0 dB, rate 0.5, IM/DD detection.
inline secrecy::SecrecyScenario fig3_scenario(double eve_db,
                                              std::size_t water_index = 0,
                                              double main_db = 30.0) {
  secrecy::SecrecyScenario s;
  s.main_rf = channels::AlphaMuLink::make(0.9, 1.5,
                                          std::pow(10.0, main_db / 10.0));
  s.eavesdropper_rf =
      channels::AlphaMuLink::make(0.9, 1.5, std::pow(10.0, eve_db / 10.0));
  s.uwoc = channels::EggLink::make(water_table()[water_index].params, 2, 1.0);
  s.rate_s = 0.5;
  return s;
}

}  // namespace rfuwoc::test
