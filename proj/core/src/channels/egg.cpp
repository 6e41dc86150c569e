// Copyright (c) 2026 the rfuwoc authors
// SPDX-License-Identifier: Apache-2.0
#include "rfuwoc/channels/egg.hpp"

#include <cmath>
#include <stdexcept>

#include "rfuwoc/specfn/gamma.hpp"

namespace rfuwoc::channels {

EggLink EggLink::make(const WaterParams& water, int r, double mu_r) {
  return make(water.omega, water.lambda, water.a, water.b, water.c, r, mu_r);
}

EggLink EggLink::make(double omega, double lambda, double a, double b,
                      double c, int r, double mu_r) {
  if (!(omega >= 0.0) || !(omega <= 1.0)) {
    throw std::invalid_argument("EggLink: omega must be in [0, 1]");
  }
  if (!(lambda > 0.0) || !(a > 0.0) || !(b > 0.0) || !(c > 0.0) ||
      !(mu_r > 0.0)) {
    throw std::invalid_argument(
        "EggLink: lambda, a, b, c and mu_r must be > 0");
  }
  if (r != 1 && r != 2) {
    throw std::invalid_argument("EggLink: detection exponent r must be 1 or 2");
  }
  EggLink link;
  link.omega = omega;
  link.lambda = lambda;
  link.a = a;
  link.b = b;
  link.c = c;
  link.r = r;
  link.mu_r = mu_r;
  return link;
}

double egg_snr_pdf(const EggLink& link, double snr) {
  if (!(snr > 0.0)) {
    throw std::domain_error("egg_snr_pdf: snr must be > 0");
  }
  const double rr = static_cast<double>(link.r);
  const double gg_arg = snr / (std::pow(link.b, rr) * link.mu_r);
  const double gg = link.c * (1.0 - link.omega) /
                    (snr * rr * specfn::gamma_real(link.a)) *
                    std::exp(-std::pow(gg_arg, link.c / rr)) *
                    std::pow(gg_arg, link.a * link.c / rr);
  const double et = std::pow(snr / link.mu_r, 1.0 / rr);
  const double ex = link.omega / (snr * link.lambda * rr) * et *
                    std::exp(-et / link.lambda);
  return gg + ex;
}

double egg_snr_ccdf_exp_branch(const EggLink& link, double snr) {
  const double rr = static_cast<double>(link.r);
  return link.omega *
         std::exp(-std::pow(snr / link.mu_r, 1.0 / rr) / link.lambda);
}

double egg_snr_ccdf_gg_branch(const EggLink& link, double snr) {
  const double rr = static_cast<double>(link.r);
  const double arg =
      std::pow(snr, link.c / rr) /
      (std::pow(link.b, link.c) * std::pow(link.mu_r, link.c / rr));
  return (1.0 - link.omega) * specfn::gamma_q(link.a, arg);
}

double egg_snr_ccdf(const EggLink& link, double snr) {
  if (!(snr >= 0.0)) {
    throw std::domain_error("egg_snr_ccdf: snr must be >= 0");
  }
  if (snr == 0.0) {
    return 1.0;
  }
  return egg_snr_ccdf_exp_branch(link, snr) +
         egg_snr_ccdf_gg_branch(link, snr);
}

double egg_irradiance_moment(const EggLink& link, int k) {
  if (k < 0) {
    throw std::invalid_argument("egg_irradiance_moment: k must be >= 0");
  }
  const double kk = static_cast<double>(k);
  const double exp_part = std::pow(link.lambda, kk) * std::tgamma(kk + 1.0);
  const double gg_part =
      std::pow(link.b, kk) *
      std::exp(specfn::ln_gamma_real(link.a + kk / link.c) -
               specfn::ln_gamma_real(link.a));
  return link.omega * exp_part + (1.0 - link.omega) * gg_part;
}

}  // namespace rfuwoc::channels
