// Copyright (c) 2026 the rfuwoc authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

namespace rfuwoc::specfn {

/// Principal-branch log-Gamma for complex argument.
///
/// Agrees with the real lgamma on the positive axis and is analytic off the
/// cut (-inf, 0]. The imaginary part is not reduced mod 2*pi, so
/// exp(ln_gamma(z)) == gamma(z) everywhere the function is defined.
///
/// Throws std::domain_error when z is a non-positive integer (pole), using an
/// absolute tolerance of 1e-12 on the distance to the pole.
std::complex<double> ln_gamma(std::complex<double> z);

/// Upper incomplete Gamma function Gamma(a, x) = int_x^inf t^(a-1) e^(-t) dt.
/// Requires a > 0 and x >= 0; Gamma(a, 0) == Gamma(a).
double upper_incomplete_gamma(double a, double x);

/// Regularized upper incomplete Gamma Q(a, x) = Gamma(a, x) / Gamma(a).
double gamma_q(double a, double x);

/// Regularized lower incomplete Gamma P(a, x) = 1 - Q(a, x).
double gamma_p(double a, double x);

/// Gamma(x) for real x > 0.
double gamma_real(double x);

/// log Gamma(x) for real x > 0.
double ln_gamma_real(double x);

}  // namespace rfuwoc::specfn
