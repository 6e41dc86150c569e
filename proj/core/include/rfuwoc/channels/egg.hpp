// Copyright (c) 2026 the rfuwoc authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <string>

namespace rfuwoc::channels {

/// Water-condition dependent parameters of the exponential-generalized-Gamma
/// irradiance model: mixture weight omega, exponential scale lambda and
/// generalized-Gamma shape/scale/exponent (a, b, c).
struct WaterParams {
  double omega = 0.0;
  double lambda = 1.0;
  double a = 1.0;
  double b = 1.0;
  double c = 1.0;
};

/// Named water condition, e.g. "[2.4, 0.05]" for
/// [air-bubble level, temperature gradient].
struct WaterScenario {
  std::string label;
  WaterParams params;
};

/// Underwater optical link: EGG turbulence parameters plus the detection
/// exponent r (1 = heterodyne, 2 = IM/DD) and the average electrical SNR
/// mu_r (linear scale).
struct EggLink {
  double omega = 0.0;
  double lambda = 1.0;
  double a = 1.0;
  double b = 1.0;
  double c = 1.0;
  int r = 2;
  double mu_r = 1.0;

  static EggLink make(const WaterParams& water, int r, double mu_r);
  static EggLink make(double omega, double lambda, double a, double b,
                      double c, int r, double mu_r);
};

/// SNR density at snr > 0 under the mapping snr = mu_r * I^r.
double egg_snr_pdf(const EggLink& link, double snr);

/// CCDF Pr[snr' > snr] = omega exp(-(1/lambda)(snr/mu_r)^(1/r))
///   + (1-omega) Gamma(a, snr^(c/r)/(b^c mu_r^(c/r))) / Gamma(a), snr >= 0.
double egg_snr_ccdf(const EggLink& link, double snr);

/// The two mixture components of the CCDF, exposed separately for the
/// outage decomposition: exponential branch (including the omega weight)
/// and generalized-Gamma branch (including 1-omega).
double egg_snr_ccdf_exp_branch(const EggLink& link, double snr);
double egg_snr_ccdf_gg_branch(const EggLink& link, double snr);

/// k-th moment of the irradiance mixture; E[I] == 1 for the shipped
/// water presets.
double egg_irradiance_moment(const EggLink& link, int k);

/// Mixture sampler: with probability omega draw I ~ Exp(lambda), otherwise
/// I = b * G^(1/c) with G ~ Gamma(a, 1); returns mu_r * I^r.
template <class Stream>
double egg_sample(const EggLink& link, Stream& stream) {
  const double u = stream.uniform01();
  double irr;
  if (u < link.omega) {
    irr = -link.lambda * std::log(stream.uniform01());
  } else {
    irr = link.b * std::pow(stream.gamma(link.a), 1.0 / link.c);
  }
  return link.mu_r * std::pow(irr, static_cast<double>(link.r));
}

}  // namespace rfuwoc::channels
