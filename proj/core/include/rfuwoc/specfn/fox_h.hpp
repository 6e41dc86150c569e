// Copyright (c) 2026 the rfuwoc authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rfuwoc::specfn {

/// No contour separating the two pole families exists for the requested
/// parameter set.
class ContourInfeasible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parameters of the univariate Fox H-function
///
///   H^{m,n}_{p,q}[z | (a_1,A_1)..(a_p,A_p); (b_1,B_1)..(b_q,B_q)]
///     = (1/2*pi*i) \int_L chi(s) z^{-s} ds,
///   chi(s) = prod_{j<=m} G(b_j+B_j s) prod_{j<=n} G(1-a_j-A_j s)
///          / [prod_{j>m} G(1-b_j-B_j s) prod_{j>n} G(a_j+A_j s)],
///
/// with L a vertical line separating the poles of the first Gamma group
/// (at s = -(b_j+k)/B_j) from those of the second (at s = (1-a_j+k)/A_j).
struct FoxHParams {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<std::pair<double, double>> upper;  // (a_j, A_j), size p
  std::vector<std::pair<double, double>> lower;  // (b_j, B_j), size q

  std::size_t p() const { return upper.size(); }
  std::size_t q() const { return lower.size(); }

  /// Throws std::invalid_argument on malformed orders or non-positive
  /// weights.
  void validate() const;

  /// Rightmost pole of the lower (numerator) group; -inf when m == 0.
  double left_pole_bound() const;
  /// Leftmost pole of the upper (numerator) group; +inf when n == 0.
  double right_pole_bound() const;
};

/// Placement and accuracy controls for one Mellin-Barnes line integral.
struct ContourSpec {
  /// Re(s) of the integration line; NaN selects the midpoint of the
  /// feasible gap automatically.
  double real_part = std::numeric_limits<double>::quiet_NaN();
  double half_height = 40.0;   // initial truncation of |Im s|
  double rel_tol = 1e-10;
  int max_nodes = 400000;

  void validate() const;
};

struct HEvalResult {
  double value = 0.0;
  double est_rel_error = 0.0;
  /// |Im| of the contour integral relative to |value|; a consistency
  /// diagnostic, near zero for real-parameter inputs.
  double imag_residue = 0.0;
  bool converged = false;
  int nodes = 0;
};

/// log of the Mellin-Barnes kernel chi(s).
std::complex<double> ln_fox_h_kernel(const FoxHParams& params,
                                     std::complex<double> s);

/// Evaluates the H-function at z > 0 by adaptive quadrature along the
/// truncated contour. The truncation height is doubled until the estimated
/// tail contribution falls below rel_tol/10 of the integral. A result that
/// exhausts max_nodes is returned with converged == false.
HEvalResult fox_h(const FoxHParams& params, double z,
                  const ContourSpec& contour = {});

}  // namespace rfuwoc::specfn
