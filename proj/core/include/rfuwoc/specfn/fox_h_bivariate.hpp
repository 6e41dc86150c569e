// Copyright (c) 2026 the rfuwoc authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "rfuwoc/specfn/fox_h.hpp"

namespace rfuwoc::specfn {

/// Parameters of the bivariate Fox H-function
///
///   H[x; y] = (1/(2*pi*i)^2) \int\int psi(s,t) theta_x(s) theta_y(t)
///             x^s y^t ds dt
///
/// where the outer block couples the two integration variables,
///
///   psi(s,t) = prod_{j<=n1} G(1-a_j+Ax_j s+Ay_j t)
///            / [prod_{j>n1} G(a_j-Ax_j s-Ay_j t)
///               * prod_j G(1-b_j+Bx_j s+By_j t)],
///
/// and each inner block is the kernel of a univariate H-function evaluated
/// at the mirrored variable, theta_x(s) = chi_x(-s). With an empty outer
/// block the function factorizes into the product of the two univariate
/// H-functions described by x_inner and y_inner.
struct BivarFoxHParams {
  std::vector<std::array<double, 3>> outer_upper;  // (a, Ax, Ay)
  std::vector<std::array<double, 3>> outer_lower;  // (b, Bx, By)
  /// Number of leading outer_upper entries placed in the numerator.
  std::size_t outer_n = 0;
  FoxHParams x_inner;
  FoxHParams y_inner;

  void validate() const;
};

struct BivarHEvalResult {
  double value = 0.0;
  double est_rel_error = 0.0;
  double imag_residue = 0.0;
  bool converged = false;
  long nodes = 0;  // kernel evaluations across both contours
  double contour_re_s = 0.0;
  double contour_re_t = 0.0;
};

/// Evaluates the bivariate H-function at x, y > 0 by nested adaptive
/// quadrature over the two truncated vertical lines. Contour positions are
/// chosen as the Chebyshev center of the pole-separation constraints
/// (inner-group bounds plus the coupled outer-Gamma half-planes) unless
/// given explicitly via the ContourSpec real parts.
BivarHEvalResult fox_h_bivariate(const BivarFoxHParams& params, double x,
                                 double y, const ContourSpec& contour_x,
                                 const ContourSpec& contour_y);

}  // namespace rfuwoc::specfn
