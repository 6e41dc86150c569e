// Copyright (c) 2026 the rfuwoc authors
// SPDX-License-Identifier: Apache-2.0
#include "rfuwoc/channels/alpha_mu.hpp"

#include <cmath>
#include <stdexcept>

#include "rfuwoc/specfn/gamma.hpp"

namespace rfuwoc::channels {

AlphaMuLink AlphaMuLink::make(double alpha, double mu, double mean_snr) {
  if (!(alpha > 0.0) || !(mu > 0.0) || !(mean_snr > 0.0)) {
    throw std::invalid_argument(
        "AlphaMuLink: alpha, mu and mean_snr must be > 0");
  }
  AlphaMuLink link;
  link.alpha = alpha;
  link.mu = mu;
  link.mean_snr = mean_snr;
  link.beta = std::exp(specfn::ln_gamma_real(mu + 1.0 / alpha) -
                       specfn::ln_gamma_real(mu));
  link.lambda_cap = link.beta / mean_snr;
  link.kappa = link.lambda_cap / specfn::gamma_real(mu);
  return link;
}

double alpha_mu_pdf(const AlphaMuLink& link, double snr) {
  if (!(snr > 0.0)) {
    if (link.alpha * link.mu < 1.0) {
      throw std::domain_error(
          "alpha_mu_pdf: density unbounded at 0 for alpha*mu < 1");
    }
    return 0.0;
  }
  const double lg = link.lambda_cap * snr;
  return link.alpha * link.kappa *
         std::pow(lg, link.alpha * link.mu - 1.0) *
         std::exp(-std::pow(lg, link.alpha));
}

double alpha_mu_ccdf(const AlphaMuLink& link, double snr) {
  if (!(snr >= 0.0)) {
    throw std::domain_error("alpha_mu_ccdf: snr must be >= 0");
  }
  if (snr == 0.0) {
    return 1.0;
  }
  return specfn::gamma_q(link.mu,
                         std::pow(link.lambda_cap * snr, link.alpha));
}

specfn::FoxHParams alpha_mu_ccdf_hparams(const AlphaMuLink& link) {
  specfn::FoxHParams h;
  h.m = 2;
  h.n = 0;
  h.upper = {{1.0, 1.0}};
  h.lower = {{0.0, 1.0}, {link.mu, 1.0 / link.alpha}};
  return h;
}

double alpha_mu_ccdf_hform(const AlphaMuLink& link, double snr,
                           const specfn::ContourSpec& contour) {
  if (!(snr >= 0.0)) {
    throw std::domain_error("alpha_mu_ccdf_hform: snr must be >= 0");
  }
  if (snr == 0.0) {
    return 1.0;
  }
  const auto h = specfn::fox_h(alpha_mu_ccdf_hparams(link),
                               link.lambda_cap * snr, contour);
  return link.kappa / link.lambda_cap * h.value;
}

double alpha_mu_pdf_mu_form(double alpha, double mu, double mean_snr,
                            double snr) {
  if (!(snr > 0.0)) {
    throw std::domain_error("alpha_mu_pdf_mu_form: snr must be > 0");
  }
  const double am = alpha * mu;
  return alpha * std::pow(mu, mu) /
         (specfn::gamma_real(mu) * std::pow(mean_snr, am)) *
         std::pow(snr, am - 1.0) *
         std::exp(-mu * std::pow(snr / mean_snr, alpha));
}

}  // namespace rfuwoc::channels
