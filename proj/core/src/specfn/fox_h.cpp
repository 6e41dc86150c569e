// Copyright (c) 2026 the rfuwoc authors
// SPDX-License-Identifier: Apache-2.0
#include "rfuwoc/specfn/fox_h.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rfuwoc/specfn/gamma.hpp"
#include "rfuwoc/specfn/quadrature.hpp"

namespace rfuwoc::specfn {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

void FoxHParams::validate() const {
  if (m > q() || n > p()) {
    throw std::invalid_argument("FoxHParams: require m <= q and n <= p");
  }
  for (const auto& [a, A] : upper) {
    (void)a;
    if (!(A > 0.0)) {
      throw std::invalid_argument("FoxHParams: upper weights must be > 0");
    }
  }
  for (const auto& [b, B] : lower) {
    (void)b;
    if (!(B > 0.0)) {
      throw std::invalid_argument("FoxHParams: lower weights must be > 0");
    }
  }
}

double FoxHParams::left_pole_bound() const {
  double bound = -kInf;
  for (std::size_t j = 0; j < m; ++j) {
    bound = std::max(bound, -lower[j].first / lower[j].second);
  }
  return bound;
}

double FoxHParams::right_pole_bound() const {
  double bound = kInf;
  for (std::size_t j = 0; j < n; ++j) {
    bound = std::min(bound, (1.0 - upper[j].first) / upper[j].second);
  }
  return bound;
}

void ContourSpec::validate() const {
  if (!(rel_tol > 0.0) || !(rel_tol < 1.0)) {
    throw std::invalid_argument("ContourSpec: rel_tol must be in (0, 1)");
  }
  if (!(half_height > 0.0) || !std::isfinite(half_height)) {
    throw std::invalid_argument(
        "ContourSpec: half_height must be finite and > 0");
  }
  if (max_nodes <= 0) {
    throw std::invalid_argument("ContourSpec: max_nodes must be positive");
  }
}

std::complex<double> ln_fox_h_kernel(const FoxHParams& params,
                                     std::complex<double> s) {
  std::complex<double> acc = 0.0;
  for (std::size_t j = 0; j < params.lower.size(); ++j) {
    const auto& [b, B] = params.lower[j];
    if (j < params.m) {
      acc += ln_gamma(b + B * s);
    } else {
      acc -= ln_gamma(1.0 - b - B * s);
    }
  }
  for (std::size_t j = 0; j < params.upper.size(); ++j) {
    const auto& [a, A] = params.upper[j];
    if (j < params.n) {
      acc += ln_gamma(1.0 - a - A * s);
    } else {
      acc -= ln_gamma(a + A * s);
    }
  }
  return acc;
}

namespace {

// Magnitude of the integrand (log scale) on the real axis; +inf when the
// point collides with a Gamma pole.
double ln_integrand_mag(const FoxHParams& params, double c, double ln_z) {
  try {
    return (ln_fox_h_kernel(params, c) - c * ln_z).real();
  } catch (const std::domain_error&) {
    return kInf;
  }
}

double select_contour(const FoxHParams& params, double requested,
                      double ln_z) {
  const double lo = params.left_pole_bound();
  const double hi = params.right_pole_bound();
  if (!(lo < hi)) {
    throw ContourInfeasible("fox_h: pole groups leave no separating contour");
  }
  if (!std::isnan(requested)) {
    if (!(requested > lo) || !(requested < hi)) {
      throw ContourInfeasible(
          "fox_h: requested contour does not separate the pole groups");
    }
    return requested;
  }
  if (std::isfinite(lo) && std::isfinite(hi)) {
    // Midpoint of the gap: farthest from both pole families.
    return 0.5 * (lo + hi);
  }
  if (!std::isfinite(lo) && !std::isfinite(hi)) {
    return 0.0;
  }
  // One-sided gap: the line can move arbitrarily far from the single pole
  // family. Place it near the saddle, i.e. minimize the tau = 0 integrand
  // magnitude; this keeps the quadrature scale comparable to the result and
  // avoids cancellation for strongly decaying targets.
  const bool from_left = std::isfinite(lo);
  auto at_offset = [&](double off) { return from_left ? lo + off : hi - off; };
  double best_off = 1.0;
  double best_mag = ln_integrand_mag(params, at_offset(best_off), ln_z);
  for (double off = 0.25; off <= 4096.0; off *= 2.0) {
    const double mag = ln_integrand_mag(params, at_offset(off), ln_z);
    if (mag < best_mag) {
      best_mag = mag;
      best_off = off;
    }
  }
  // Ternary refinement on the bracketing interval.
  double a = best_off * 0.5, b = best_off * 2.0;
  for (int it = 0; it < 60; ++it) {
    const double m1 = a + (b - a) / 3.0;
    const double m2 = b - (b - a) / 3.0;
    if (ln_integrand_mag(params, at_offset(m1), ln_z) <
        ln_integrand_mag(params, at_offset(m2), ln_z)) {
      b = m2;
    } else {
      a = m1;
    }
  }
  return at_offset(0.5 * (a + b));
}

}  // namespace

HEvalResult fox_h(const FoxHParams& params, double z,
                  const ContourSpec& contour) {
  params.validate();
  contour.validate();
  if (!(z > 0.0)) {
    throw std::domain_error("fox_h: argument must be > 0");
  }

  const double ln_z = std::log(z);
  const double c = select_contour(params, contour.real_part, ln_z);
  auto integrand = [&](double tau) -> std::complex<double> {
    const std::complex<double> s(c, tau);
    std::complex<double> ln_val;
    try {
      ln_val = ln_fox_h_kernel(params, s) - s * ln_z;
    } catch (const std::domain_error&) {
      // A quadrature node can land exactly on a denominator Gamma pole,
      // where the kernel has a zero; numerator poles are excluded by the
      // contour choice.
      return 0.0;
    }
    if (ln_val.real() < -745.0) {
      return 0.0;  // underflow; the tail is genuinely negligible
    }
    return std::exp(ln_val);
  };

  HEvalResult out;
  double height = contour.half_height;
  QuadResult<std::complex<double>> quad;
  bool tail_ok = false;
  for (int grow = 0; grow < 7; ++grow) {
    quad = integrate_adaptive<std::complex<double>>(
        integrand, -height, height, contour.rel_tol, 0.0,
        contour.max_nodes - out.nodes);
    out.nodes += quad.nodes;
    const double edge = std::max({std::abs(integrand(-height)),
                                  std::abs(integrand(height)),
                                  std::abs(integrand(0.97 * height)),
                                  std::abs(integrand(-0.97 * height))});
    out.nodes += 4;
    const double tail_est = edge * height;
    const double scale = std::abs(quad.value);
    if (tail_est <= contour.rel_tol / 10.0 * std::max(scale, 1e-300)) {
      tail_ok = true;
      break;
    }
    if (out.nodes >= contour.max_nodes) {
      break;
    }
    height *= 2.0;
  }

  const double abs_val = std::abs(quad.value);
  out.value = quad.value.real() / kTwoPi;
  out.imag_residue =
      abs_val > 0.0 ? std::abs(quad.value.imag()) / abs_val : 0.0;
  out.est_rel_error =
      abs_val > 0.0 ? quad.abs_error / abs_val : quad.abs_error;
  out.converged = quad.converged && tail_ok;
  return out;
}

}  // namespace rfuwoc::specfn
