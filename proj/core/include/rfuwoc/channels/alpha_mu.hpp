// Copyright (c) 2026 the rfuwoc authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include "rfuwoc/specfn/fox_h.hpp"

namespace rfuwoc::channels {

/// One alpha-mu faded RF link, parametrized by the non-linearity alpha, the
/// multipath cluster count mu and the mean SNR (linear scale).
///
/// The derived quantities use the mean-true normalization
///   beta = Gamma(mu + 1/alpha) / Gamma(mu),
///   Lambda = beta / mean_snr,  kappa = Lambda / Gamma(mu),
/// under which the SNR density is
///   f(g) = alpha * kappa * (Lambda g)^(alpha mu - 1) exp(-(Lambda g)^alpha)
/// and E[g] = mean_snr exactly.
struct AlphaMuLink {
  double alpha = 1.0;
  double mu = 1.0;
  double mean_snr = 1.0;
  // derived
  double beta = 1.0;
  double lambda_cap = 1.0;  // Lambda
  double kappa = 1.0;

  static AlphaMuLink make(double alpha, double mu, double mean_snr);
};

/// SNR density at snr > 0.
double alpha_mu_pdf(const AlphaMuLink& link, double snr);

/// CCDF Pr[g > snr] = Gamma(mu, (Lambda snr)^alpha) / Gamma(mu), snr >= 0.
double alpha_mu_ccdf(const AlphaMuLink& link, double snr);

/// Same CCDF through the Mellin-Barnes route; cross-validates the
/// closed form against the contour engine.
double alpha_mu_ccdf_hform(const AlphaMuLink& link, double snr,
                           const specfn::ContourSpec& contour = {});

/// H-function parameter block of the CCDF, (kappa/Lambda) *
/// H^{2,0}_{1,2}[Lambda g | (1,1); (0,1),(mu,1/alpha)]. Exposed for reuse
/// by the outage formulas.
specfn::FoxHParams alpha_mu_ccdf_hparams(const AlphaMuLink& link);

/// Density in the direct (mu-based) parametrization
///   f(g) = alpha mu^mu / (Gamma(mu) gbar^(alpha mu)) g^(alpha mu - 1)
///          exp(-mu (g/gbar)^alpha).
/// Kept for comparison only; it coincides with alpha_mu_pdf iff
/// mu = beta^alpha, so the mean-true form above is canonical everywhere.
double alpha_mu_pdf_mu_form(double alpha, double mu, double mean_snr,
                            double snr);

/// Inverse-transform style sampler: g = W^(1/alpha) / Lambda with
/// W ~ Gamma(mu, 1). Rng is any callable returning the next Gamma(mu)
/// variate's underlying uniforms; see mc::Stream.
template <class Stream>
double alpha_mu_sample(const AlphaMuLink& link, Stream& stream) {
  const double w = stream.gamma(link.mu);
  return std::pow(w, 1.0 / link.alpha) / link.lambda_cap;
}

}  // namespace rfuwoc::channels
