// Copyright (c) 2026 the rfuwoc authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include "rfuwoc/channels/alpha_mu.hpp"
#include "rfuwoc/channels/egg.hpp"

namespace rfuwoc::secrecy {

/// The two-hop wiretap setup: source-to-relay RF link (gamma_1), the
/// eavesdropper's RF link (gamma_e), the relay-to-destination underwater
/// optical link (gamma_2), and the target secrecy rate in bits per channel
/// use. All SNR parameters are linear scale.
struct SecrecyScenario {
  channels::AlphaMuLink main_rf;
  channels::AlphaMuLink eavesdropper_rf;
  channels::EggLink uwoc;
  double rate_s = 0.0;

  /// Outage threshold Theta = 2^rate_s.
  double theta() const { return std::exp2(rate_s); }

  void validate() const;

  /// Copy with a different mean SNR on the main RF link.
  SecrecyScenario with_main_snr(double mean_snr) const;
  /// Copy with a different mean SNR on the eavesdropper link.
  SecrecyScenario with_eve_snr(double mean_snr) const;
};

enum class SopMethod {
  kExact,
  kOracle,
  kAsymptoticMainHighSnr,
  kAsymptoticEveHighSnr,
  kSaturation,
};

struct SopResult {
  /// Outage probability, clamped to [0, 1].
  double value = 0.0;
  /// Same quantity before clamping; tiny excursions outside [0, 1] are
  /// contour truncation noise.
  double raw_value = 0.0;
  SopMethod method = SopMethod::kExact;
  /// Estimated absolute error.
  double est_error = 0.0;
  bool converged = true;
  /// False when an asymptotic expression is used outside the regime where
  /// its expansion parameter is small.
  bool in_domain = true;
};

}  // namespace rfuwoc::secrecy
