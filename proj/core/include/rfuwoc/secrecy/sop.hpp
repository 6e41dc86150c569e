// Copyright (c) 2026 the rfuwoc authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <vector>

#include "rfuwoc/secrecy/scenario.hpp"
#include "rfuwoc/specfn/fox_h.hpp"
#include "rfuwoc/specfn/fox_h_bivariate.hpp"

namespace rfuwoc::secrecy {

/// The grid search never reached the saturation criterion.
class NoSaturationOnGrid : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// CDF of the end-to-end SNR min(gamma_1, gamma_2):
/// F_eq(g) = 1 - Fbar_1(g) * Fbar_2(g), from the closed channel CCDFs.
double end_to_end_cdf(const SecrecyScenario& s, double snr);

/// Same CDF assembled from the H-function representation of the RF CCDF;
/// the dual route used to cross-validate the contour engine.
double end_to_end_cdf_hform(const SecrecyScenario& s, double snr,
                            const specfn::ContourSpec& contour = {});

/// The two additive outage terms, split by the mixture branch of the
/// optical CCDF: SOP = 1 + k_gg + k_exp with both terms <= 0.
struct SopTerms {
  double k_gg = 0.0;   // generalized-Gamma branch
  double k_exp = 0.0;  // exponential branch
  double est_error = 0.0;
  bool converged = true;
};

/// Ground-truth route: adaptive quadrature of
/// int_0^inf F_eq(Theta g) f_e(g) dg, evaluated entirely through the
/// closed-form channel functions (no contour integrals involved).
SopResult sop_oracle(const SecrecyScenario& s, double quad_tol = 1e-9);

/// The same integral split into its two mixture-branch terms.
SopTerms sop_oracle_terms(const SecrecyScenario& s, double quad_tol = 1e-9);

/// Contour controls for the exact closed form. The defaults keep the
/// double Mellin-Barnes error well under the oracle agreement tolerance.
struct ExactContours {
  specfn::ContourSpec inner{};   // s-line (x argument)
  specfn::ContourSpec outer{};   // t-line (y argument)
  ExactContours() {
    inner.rel_tol = 1e-9;
    inner.max_nodes = 120000;
    outer.rel_tol = 1e-8;
    outer.max_nodes = 4000;
  }
};

/// Exact closed form: SOP = 1 + K_gg + K_exp with both terms evaluated as
/// bivariate H-functions of the scenario-derived arguments.
SopResult sop_exact(const SecrecyScenario& s,
                    const ExactContours& contours = {});

/// The bivariate H-function terms of the exact closed form.
SopTerms sop_exact_terms(const SecrecyScenario& s,
                         const ExactContours& contours = {});

/// Parameter blocks of the two bivariate H-functions together with their
/// arguments and prefactors; exposed for the engine cross-checks.
struct ExactBivariateForm {
  specfn::BivarFoxHParams params;
  double x = 0.0;
  double y = 0.0;
  double prefactor = 0.0;  // K = prefactor * H[x; y]
};
ExactBivariateForm exact_k_gg_form(const SecrecyScenario& s);
ExactBivariateForm exact_k_exp_form(const SecrecyScenario& s);

/// High main-link SNR expansion (gamma_1 -> inf): two univariate
/// H-functions per branch. in_domain is false when Theta*Lambda/Lambda_e
/// >= 1, i.e. outside the expansion regime.
SopResult sop_asymptotic_main(const SecrecyScenario& s);

/// The gamma_1-independent limit of the asymptotic expansion: the outage
/// floor reached at high transmit power.
SopResult sop_saturation(const SecrecyScenario& s);

/// High eavesdropper SNR expansion (gamma_e -> inf). in_domain is false
/// below 0 dB mean eavesdropper SNR.
SopResult sop_asymptotic_eve(const SecrecyScenario& s);

/// Smallest grid point (dB) at which the exact SOP is within rel_eps of
/// the saturation floor; the energy-efficient transmit power. Grid must be
/// ascending. Throws NoSaturationOnGrid when the criterion is never met.
double optimal_transmit_power(const SecrecyScenario& s, double rel_eps,
                              const std::vector<double>& grid_db,
                              const ExactContours& contours = {});

/// dB <-> linear helpers (power quantities): value_db = 10 log10(linear).
double db_to_linear(double db);
double linear_to_db(double linear);

}  // namespace rfuwoc::secrecy
