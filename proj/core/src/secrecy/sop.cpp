// Copyright (c) 2026 the rfuwoc authors
// SPDX-License-Identifier: Apache-2.0
#include "rfuwoc/secrecy/sop.hpp"

#include <algorithm>
#include <cmath>

#include "rfuwoc/specfn/gamma.hpp"
#include "rfuwoc/specfn/quadrature.hpp"

namespace rfuwoc::secrecy {

namespace {

using channels::AlphaMuLink;
using channels::EggLink;
using specfn::FoxHParams;

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

// int_0^inf g(w) w^(mu-1) e^(-w) dw for g bounded on [0, inf).
// The [0,1] piece is regularized with w = u^(1/mu); the rest is truncated
// where the Gamma weight is beyond double precision.
template <class G>
specfn::QuadResult<double> gamma_weighted_integral(G&& g, double mu,
                                                   double abs_tol,
                                                   int max_evals) {
  auto head = [&](double u) {
    const double w = std::pow(u, 1.0 / mu);
    return g(w) * std::exp(-w) / mu;
  };
  const auto r1 = specfn::integrate_adaptive<double>(
      head, 0.0, 1.0, 0.0, 0.5 * abs_tol, max_evals / 2);
  const double tail_cut = std::max(80.0, 6.0 * mu);
  auto body = [&](double w) {
    return g(w) * std::exp((mu - 1.0) * std::log(w) - w);
  };
  const auto r2 = specfn::integrate_adaptive<double>(
      body, 1.0, tail_cut, 0.0, 0.5 * abs_tol, max_evals / 2);
  specfn::QuadResult<double> out;
  out.value = r1.value + r2.value;
  out.abs_error = r1.abs_error + r2.abs_error +
                  specfn::upper_incomplete_gamma(mu, tail_cut);
  out.nodes = r1.nodes + r2.nodes;
  out.converged = r1.converged && r2.converged;
  return out;
}

FoxHParams rf_ccdf_inner(const AlphaMuLink& rf) {
  return channels::alpha_mu_ccdf_hparams(rf);
}

}  // namespace

void SecrecyScenario::validate() const {
  if (!(rate_s >= 0.0)) {
    throw std::invalid_argument("SecrecyScenario: rate_s must be >= 0");
  }
}

SecrecyScenario SecrecyScenario::with_main_snr(double mean_snr) const {
  SecrecyScenario s = *this;
  s.main_rf = AlphaMuLink::make(main_rf.alpha, main_rf.mu, mean_snr);
  return s;
}

SecrecyScenario SecrecyScenario::with_eve_snr(double mean_snr) const {
  SecrecyScenario s = *this;
  s.eavesdropper_rf = AlphaMuLink::make(eavesdropper_rf.alpha,
                                        eavesdropper_rf.mu, mean_snr);
  return s;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

double end_to_end_cdf(const SecrecyScenario& s, double snr) {
  if (!(snr >= 0.0)) {
    throw std::domain_error("end_to_end_cdf: snr must be >= 0");
  }
  if (snr == 0.0) return 0.0;
  return 1.0 - channels::alpha_mu_ccdf(s.main_rf, snr) *
                   channels::egg_snr_ccdf(s.uwoc, snr);
}

double end_to_end_cdf_hform(const SecrecyScenario& s, double snr,
                            const specfn::ContourSpec& contour) {
  if (!(snr >= 0.0)) {
    throw std::domain_error("end_to_end_cdf_hform: snr must be >= 0");
  }
  if (snr == 0.0) return 0.0;
  const double h =
      channels::alpha_mu_ccdf_hform(s.main_rf, snr, contour);
  return 1.0 - (channels::egg_snr_ccdf_gg_branch(s.uwoc, snr) +
                channels::egg_snr_ccdf_exp_branch(s.uwoc, snr)) *
                   h;
}

SopTerms sop_oracle_terms(const SecrecyScenario& s, double quad_tol) {
  s.validate();
  if (!(quad_tol > 0.0) || quad_tol > 1e-3) {
    throw std::invalid_argument("sop_oracle: quad_tol must be in (0, 1e-3]");
  }
  const double theta = s.theta();
  const AlphaMuLink& eve = s.eavesdropper_rf;
  const double inv_ge = specfn::gamma_real(eve.mu);
  auto snr_of = [&](double w) {
    return theta * std::pow(w, 1.0 / eve.alpha) / eve.lambda_cap;
  };
  const int budget = 400000;
  auto g_gg = [&](double w) {
    const double g = snr_of(w);
    return channels::egg_snr_ccdf_gg_branch(s.uwoc, g) *
           channels::alpha_mu_ccdf(s.main_rf, g);
  };
  auto g_exp = [&](double w) {
    const double g = snr_of(w);
    return channels::egg_snr_ccdf_exp_branch(s.uwoc, g) *
           channels::alpha_mu_ccdf(s.main_rf, g);
  };
  const auto r_gg = gamma_weighted_integral(g_gg, eve.mu,
                                            0.5 * quad_tol * inv_ge, budget);
  const auto r_exp = gamma_weighted_integral(g_exp, eve.mu,
                                             0.5 * quad_tol * inv_ge, budget);
  SopTerms terms;
  terms.k_gg = -r_gg.value / inv_ge;
  terms.k_exp = -r_exp.value / inv_ge;
  terms.est_error = (r_gg.abs_error + r_exp.abs_error) / inv_ge;
  terms.converged = r_gg.converged && r_exp.converged;
  return terms;
}

SopResult sop_oracle(const SecrecyScenario& s, double quad_tol) {
  const SopTerms terms = sop_oracle_terms(s, quad_tol);
  SopResult res;
  res.method = SopMethod::kOracle;
  res.raw_value = 1.0 + terms.k_gg + terms.k_exp;
  res.value = clamp01(res.raw_value);
  res.est_error = terms.est_error;
  res.converged = terms.converged;
  return res;
}

ExactBivariateForm exact_k_gg_form(const SecrecyScenario& s) {
  const AlphaMuLink& rf = s.main_rf;
  const AlphaMuLink& eve = s.eavesdropper_rf;
  const EggLink& w = s.uwoc;
  const double theta = s.theta();
  const double rr = static_cast<double>(w.r);

  ExactBivariateForm form;
  form.params.outer_upper = {
      {1.0 - eve.mu, w.c / (rr * eve.alpha), 1.0 / eve.alpha}};
  form.params.outer_n = 1;
  form.params.x_inner.m = 2;
  form.params.x_inner.n = 0;
  form.params.x_inner.upper = {{1.0, 1.0}};
  form.params.x_inner.lower = {{0.0, 1.0}, {w.a, 1.0}};
  form.params.y_inner = rf_ccdf_inner(rf);
  form.x = std::pow(w.b, -w.c) *
           std::pow(theta / (eve.lambda_cap * w.mu_r), w.c / rr);
  form.y = theta * rf.lambda_cap / eve.lambda_cap;
  form.prefactor = -(1.0 - w.omega) /
                   (specfn::gamma_real(rf.mu) * specfn::gamma_real(w.a) *
                    specfn::gamma_real(eve.mu));
  return form;
}

ExactBivariateForm exact_k_exp_form(const SecrecyScenario& s) {
  const AlphaMuLink& rf = s.main_rf;
  const AlphaMuLink& eve = s.eavesdropper_rf;
  const EggLink& w = s.uwoc;
  const double theta = s.theta();
  const double rr = static_cast<double>(w.r);
  const double lam_r = std::pow(w.lambda, rr);

  ExactBivariateForm form;
  form.params.outer_upper = {{1.0 - rr * eve.alpha * eve.mu, rr, rr}};
  form.params.outer_n = 1;
  form.params.x_inner.m = 1;
  form.params.x_inner.n = 0;
  form.params.x_inner.upper = {};
  form.params.x_inner.lower = {{0.0, 1.0 / eve.alpha}};
  form.params.y_inner = rf_ccdf_inner(rf);
  form.x = lam_r * eve.lambda_cap * w.mu_r / theta;
  form.y = lam_r * rf.lambda_cap * w.mu_r;
  form.prefactor = -rr * w.omega * std::pow(form.x, eve.alpha * eve.mu) /
                   (specfn::gamma_real(rf.mu) * specfn::gamma_real(eve.mu));
  return form;
}

SopTerms sop_exact_terms(const SecrecyScenario& s,
                         const ExactContours& contours) {
  s.validate();
  SopTerms terms;
  if (s.uwoc.omega < 1.0) {
    const ExactBivariateForm f = exact_k_gg_form(s);
    const auto h = specfn::fox_h_bivariate(f.params, f.x, f.y,
                                           contours.inner, contours.outer);
    terms.k_gg = f.prefactor * h.value;
    terms.est_error += std::abs(terms.k_gg) * h.est_rel_error;
    terms.converged = terms.converged && h.converged;
  }
  if (s.uwoc.omega > 0.0) {
    const ExactBivariateForm f = exact_k_exp_form(s);
    const auto h = specfn::fox_h_bivariate(f.params, f.x, f.y,
                                           contours.inner, contours.outer);
    terms.k_exp = f.prefactor * h.value;
    terms.est_error += std::abs(terms.k_exp) * h.est_rel_error;
    terms.converged = terms.converged && h.converged;
  }
  return terms;
}

SopResult sop_exact(const SecrecyScenario& s, const ExactContours& contours) {
  const SopTerms terms = sop_exact_terms(s, contours);
  SopResult res;
  res.method = SopMethod::kExact;
  res.raw_value = 1.0 + terms.k_gg + terms.k_exp;
  res.value = clamp01(res.raw_value);
  res.est_error = terms.est_error;
  res.converged = terms.converged;
  return res;
}

namespace {

// Shared pieces of the high-gamma_1 expansion and the saturation floor.
struct MainAsymptotics {
  double k_gg_const = 0.0;   // gamma_1-independent parts
  double k_exp_const = 0.0;
  double k_gg_decay = 0.0;   // Lambda^(alpha mu)-weighted parts
  double k_exp_decay = 0.0;
  double est_error = 0.0;
  bool converged = true;
};

MainAsymptotics main_asymptotics(const SecrecyScenario& s,
                                 bool with_decay_terms) {
  const AlphaMuLink& rf = s.main_rf;
  const AlphaMuLink& eve = s.eavesdropper_rf;
  const EggLink& w = s.uwoc;
  const double theta = s.theta();
  const double rr = static_cast<double>(w.r);
  const double am = rf.alpha * rf.mu;
  const double gam_a = specfn::gamma_real(w.a);
  const double gam_mu_e = specfn::gamma_real(eve.mu);
  const double gam_mu1 = specfn::gamma_real(rf.mu + 1.0);

  MainAsymptotics out;

  auto j_term = [&](double nu) {
    FoxHParams h;
    h.m = 1;
    h.n = 2;
    h.upper = {{1.0 - w.a, 1.0}, {1.0, 1.0}};
    h.lower = {{nu, w.c / (rr * eve.alpha)}, {0.0, 1.0}};
    const double arg = std::pow(w.b, w.c) *
                       std::pow(eve.lambda_cap * w.mu_r / theta, w.c / rr);
    return specfn::fox_h(h, arg);
  };
  auto m_term = [&](double nu) {
    FoxHParams h;
    h.m = 1;
    h.n = 1;
    h.upper = {{1.0, 1.0 / eve.alpha}};
    h.lower = {{rr * nu, rr}};
    const double arg =
        theta / (std::pow(w.lambda, rr) * eve.lambda_cap * w.mu_r);
    return specfn::fox_h(h, arg);
  };

  if (w.omega < 1.0) {
    const auto j0 = j_term(eve.mu);
    out.k_gg_const = -(1.0 - w.omega) / (gam_a * gam_mu_e) * j0.value;
    out.est_error += std::abs(out.k_gg_const) * j0.est_rel_error;
    out.converged = out.converged && j0.converged;
    if (with_decay_terms) {
      const auto j1 = j_term(eve.mu + am / eve.alpha);
      const double yfac =
          std::pow(theta * rf.lambda_cap / eve.lambda_cap, am);
      out.k_gg_decay =
          (1.0 - w.omega) * yfac / (gam_a * gam_mu1 * gam_mu_e) * j1.value;
      out.est_error += std::abs(out.k_gg_decay) * j1.est_rel_error;
      out.converged = out.converged && j1.converged;
    }
  }
  if (w.omega > 0.0) {
    const double xfac = std::pow(
        std::pow(w.lambda, rr) * eve.lambda_cap * w.mu_r / theta,
        eve.alpha * eve.mu);
    const auto m0 = m_term(eve.alpha * eve.mu);
    out.k_exp_const = -rr * w.omega / gam_mu_e * xfac * m0.value;
    out.est_error += std::abs(out.k_exp_const) * m0.est_rel_error;
    out.converged = out.converged && m0.converged;
    if (with_decay_terms) {
      const auto m1 = m_term(am + eve.alpha * eve.mu);
      const double yfac =
          std::pow(std::pow(w.lambda, rr) * rf.lambda_cap * w.mu_r, am);
      out.k_exp_decay =
          rr * w.omega * xfac * yfac / (gam_mu1 * gam_mu_e) * m1.value;
      out.est_error += std::abs(out.k_exp_decay) * m1.est_rel_error;
      out.converged = out.converged && m1.converged;
    }
  }
  return out;
}

}  // namespace

SopResult sop_asymptotic_main(const SecrecyScenario& s) {
  s.validate();
  const MainAsymptotics a = main_asymptotics(s, true);
  SopResult res;
  res.method = SopMethod::kAsymptoticMainHighSnr;
  res.raw_value = 1.0 + a.k_gg_const + a.k_gg_decay + a.k_exp_const +
                  a.k_exp_decay;
  res.value = clamp01(res.raw_value);
  res.est_error = a.est_error;
  res.converged = a.converged;
  res.in_domain =
      s.theta() * s.main_rf.lambda_cap / s.eavesdropper_rf.lambda_cap < 1.0;
  return res;
}

SopResult sop_saturation(const SecrecyScenario& s) {
  s.validate();
  const MainAsymptotics a = main_asymptotics(s, false);
  SopResult res;
  res.method = SopMethod::kSaturation;
  res.raw_value = 1.0 + a.k_gg_const + a.k_exp_const;
  res.value = clamp01(res.raw_value);
  res.est_error = a.est_error;
  res.converged = a.converged;
  return res;
}

SopResult sop_asymptotic_eve(const SecrecyScenario& s) {
  s.validate();
  const AlphaMuLink& rf = s.main_rf;
  const AlphaMuLink& eve = s.eavesdropper_rf;
  const EggLink& w = s.uwoc;
  const double theta = s.theta();
  const double rr = static_cast<double>(w.r);
  const double aeme = eve.alpha * eve.mu;
  const double gam_mu = specfn::gamma_real(rf.mu);
  const double gam_mu_e = specfn::gamma_real(eve.mu);

  SopResult res;
  res.method = SopMethod::kAsymptoticEveHighSnr;
  double k_gg = 0.0;
  double k_exp = 0.0;

  if (w.omega < 1.0) {
    FoxHParams h;
    h.m = 2;
    h.n = 2;
    const double rc = rr / w.c;
    h.upper = {{1.0, 1.0},
               {1.0 - rf.mu, 1.0 / rf.alpha},
               {1.0 + aeme * rc, rc}};
    h.lower = {{aeme * rc, rc}, {w.a + aeme * rc, rc}, {0.0, 1.0}};
    const double arg = std::pow(w.b, -rr) / (rf.lambda_cap * w.mu_r);
    const auto hv = specfn::fox_h(h, arg);
    k_gg = -rr * (1.0 - w.omega) * eve.alpha /
           (w.c * specfn::gamma_real(w.a) * gam_mu * gam_mu_e) *
           std::pow(std::pow(w.b, rr) * eve.lambda_cap * w.mu_r / theta,
                    aeme) *
           hv.value;
    res.est_error += std::abs(k_gg) * hv.est_rel_error;
    res.converged = res.converged && hv.converged;
  }
  if (w.omega > 0.0) {
    FoxHParams h;
    h.m = 1;
    h.n = 2;
    h.upper = {{1.0, 1.0}, {1.0 - rf.mu, 1.0 / rf.alpha}};
    h.lower = {{rr * aeme, rr}, {0.0, 1.0}};
    const double arg =
        std::pow(w.lambda, -rr) / (rf.lambda_cap * w.mu_r);
    const auto hv = specfn::fox_h(h, arg);
    k_exp = -rr * w.omega * eve.alpha / (gam_mu * gam_mu_e) *
            std::pow(eve.lambda_cap * std::pow(w.lambda, rr) * w.mu_r /
                         theta,
                     aeme) *
            hv.value;
    res.est_error += std::abs(k_exp) * hv.est_rel_error;
    res.converged = res.converged && hv.converged;
  }

  res.raw_value = 1.0 + k_gg + k_exp;
  res.value = clamp01(res.raw_value);
  res.in_domain = eve.mean_snr >= 1.0;
  return res;
}

double optimal_transmit_power(const SecrecyScenario& s, double rel_eps,
                              const std::vector<double>& grid_db,
                              const ExactContours& contours) {
  if (!(rel_eps > 0.0)) {
    throw std::invalid_argument(
        "optimal_transmit_power: rel_eps must be > 0");
  }
  if (grid_db.empty() || !std::is_sorted(grid_db.begin(), grid_db.end())) {
    throw std::invalid_argument(
        "optimal_transmit_power: grid must be ascending and non-empty");
  }
  const SopResult floor = sop_saturation(s);
  if (!(floor.value > 0.0)) {
    throw NoSaturationOnGrid(
        "optimal_transmit_power: saturation floor is zero");
  }
  for (double db : grid_db) {
    const SecrecyScenario at_power = s.with_main_snr(db_to_linear(db));
    const SopResult exact = sop_exact(at_power, contours);
    if ((exact.value - floor.value) / floor.value <= rel_eps) {
      return db;
    }
  }
  throw NoSaturationOnGrid(
      "optimal_transmit_power: criterion not met on the grid");
}

}  // namespace rfuwoc::secrecy
