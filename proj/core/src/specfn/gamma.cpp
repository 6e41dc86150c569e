// Copyright (c) 2026 the rfuwoc authors
// SPDX-License-Identifier: Apache-2.0
#include "rfuwoc/specfn/gamma.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rfuwoc::specfn {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kHalfLnTwoPi = 0.9189385332046727417803297;  // ln(2*pi)/2

// Stirling series for ln Gamma, valid for |z| >= 12 with Re(z) > 0.
// Coefficients are B_{2k} / (2k (2k-1)).
cplx stirling_ln_gamma(cplx z) {
  static constexpr double coef[] = {
      1.0 / 12.0,           -1.0 / 360.0,        1.0 / 1260.0,
      -1.0 / 1680.0,        1.0 / 1188.0,        -691.0 / 360360.0,
      1.0 / 156.0,
  };
  const cplx lz = std::log(z);
  cplx result = (z - 0.5) * lz - z + kHalfLnTwoPi;
  const cplx z2 = z * z;
  cplx zpow = z;
  for (double ck : coef) {
    result += ck / zpow;
    zpow *= z2;
  }
  return result;
}

// ln Gamma on the half-plane Re(z) >= 0.5: shift with the recurrence
// lnG(z) = lnG(z+1) - Log(z) until Stirling applies. Every Log is principal
// and its argument stays in the right half-plane, so no branch bookkeeping
// is needed here.
cplx ln_gamma_right(cplx z) {
  cplx shift = 0.0;
  while (std::abs(z) < 12.0) {
    shift += std::log(z);
    z += 1.0;
  }
  return stirling_ln_gamma(z) - shift;
}

// Principal log of sin(pi z), stable for large |Im z|.
cplx log_sin_pi(cplx z) {
  const double y = z.imag();
  if (y > 9.0) {
    // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z}); |e^{2 i pi z}| < 1.
    const cplx corr = std::log(1.0 - std::exp(cplx(0.0, kTwoPi) * z));
    const double re = kPi * y - std::numbers::ln2 + corr.real();
    double im = kPi / 2.0 - kPi * z.real() + corr.imag();
    im = std::remainder(im, kTwoPi);
    return {re, im};
  }
  if (y < -9.0) {
    const cplx r = log_sin_pi(std::conj(z));
    return std::conj(r);
  }
  return std::log(std::sin(kPi * z));
}

}  // namespace

std::complex<double> ln_gamma(std::complex<double> z) {
  const double rx = std::round(z.real());
  if (rx <= 0.0 && std::abs(z.real() - rx) <= 1e-12 &&
      std::abs(z.imag()) <= 1e-12) {
    throw std::domain_error("ln_gamma: pole at non-positive integer");
  }
  if (z.imag() == 0.0 && z.real() > 0.0) {
    return {std::lgamma(z.real()), 0.0};
  }
  if (z.real() >= 0.5) {
    return ln_gamma_right(z);
  }
  // Reflection with the branch correction of Hare (1997), which keeps the
  // result on the principal branch for either sign of Im(z).
  const double np = std::copysign(kTwoPi, z.imag()) *
                    std::floor(0.5 * z.real() + 0.25);
  return std::log(kPi) - log_sin_pi(z) + cplx(0.0, np) -
         ln_gamma_right(1.0 - z);
}

double upper_incomplete_gamma(double a, double x) {
  if (!(a > 0.0)) {
    throw std::domain_error("upper_incomplete_gamma: requires a > 0");
  }
  if (!(x >= 0.0)) {
    throw std::domain_error("upper_incomplete_gamma: requires x >= 0");
  }
  return boost::math::tgamma(a, x);
}

double gamma_q(double a, double x) {
  if (!(a > 0.0) || !(x >= 0.0)) {
    throw std::domain_error("gamma_q: requires a > 0, x >= 0");
  }
  return boost::math::gamma_q(a, x);
}

double gamma_p(double a, double x) {
  if (!(a > 0.0) || !(x >= 0.0)) {
    throw std::domain_error("gamma_p: requires a > 0, x >= 0");
  }
  return boost::math::gamma_p(a, x);
}

double gamma_real(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("gamma_real: requires x > 0");
  }
  return std::tgamma(x);
}

double ln_gamma_real(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("ln_gamma_real: requires x > 0");
  }
  return std::lgamma(x);
}

}  // namespace rfuwoc::specfn
