// Copyright (c) 2026 the rfuwoc authors
// SPDX-License-Identifier: Apache-2.0
#include "rfuwoc/specfn/fox_h_bivariate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

#include "rfuwoc/specfn/gamma.hpp"
#include "rfuwoc/specfn/quadrature.hpp"

namespace rfuwoc::specfn {

namespace {

constexpr double kFourPiSq = 4.0 * std::numbers::pi * std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

using cplx = std::complex<double>;

// Half-plane constraint u*sig_s + v*sig_t + w > 0.
struct Constraint {
  double u, v, w;
  double norm() const { return std::hypot(u, v); }
  double eval(double x, double y) const { return u * x + v * y + w; }
};

// Chebyshev center of the constraint polygon: the contour point with the
// largest normalized clearance from every pole family. Solved by vertex
// enumeration over active-constraint triples; the constraint count here is
// tiny.
std::pair<double, double> chebyshev_center(std::vector<Constraint> cons) {
  // Box the problem so the margin stays bounded even when a side is open.
  cons.push_back({1.0, 0.0, 10.0});
  cons.push_back({-1.0, 0.0, 10.0});
  cons.push_back({0.0, 1.0, 10.0});
  cons.push_back({0.0, -1.0, 10.0});

  const std::size_t nc = cons.size();
  double best_m = -kInf;
  double best_x = 0.0, best_y = 0.0;
  for (std::size_t i = 0; i < nc; ++i) {
    for (std::size_t j = i + 1; j < nc; ++j) {
      for (std::size_t k = j + 1; k < nc; ++k) {
        // Solve the 3x3 active system u x + v y - r m = -w.
        const Constraint* c3[3] = {&cons[i], &cons[j], &cons[k]};
        double a[3][4];
        for (int row = 0; row < 3; ++row) {
          a[row][0] = c3[row]->u;
          a[row][1] = c3[row]->v;
          a[row][2] = -c3[row]->norm();
          a[row][3] = -c3[row]->w;
        }
        bool singular = false;
        for (int col = 0; col < 3 && !singular; ++col) {
          int piv = col;
          for (int row = col + 1; row < 3; ++row) {
            if (std::abs(a[row][col]) > std::abs(a[piv][col])) piv = row;
          }
          if (std::abs(a[piv][col]) < 1e-13) {
            singular = true;
            break;
          }
          std::swap(a[piv], a[col]);
          for (int row = col + 1; row < 3; ++row) {
            const double f = a[row][col] / a[col][col];
            for (int cc = col; cc < 4; ++cc) a[row][cc] -= f * a[col][cc];
          }
        }
        if (singular) continue;
        double sol[3];
        for (int row = 2; row >= 0; --row) {
          double rhs = a[row][3];
          for (int cc = row + 1; cc < 3; ++cc) rhs -= a[row][cc] * sol[cc];
          sol[row] = rhs / a[row][row];
        }
        const double m = sol[2];
        if (m <= best_m) continue;
        bool feasible = true;
        for (const Constraint& c : cons) {
          if (c.eval(sol[0], sol[1]) - m * c.norm() < -1e-9) {
            feasible = false;
            break;
          }
        }
        if (feasible) {
          best_m = m;
          best_x = sol[0];
          best_y = sol[1];
        }
      }
    }
  }
  if (!(best_m > 1e-9)) {
    throw ContourInfeasible(
        "fox_h_bivariate: no contour pair separates the pole families");
  }
  return {best_x, best_y};
}

std::vector<Constraint> separation_constraints(const BivarFoxHParams& p) {
  std::vector<Constraint> cons;
  // Inner groups, in the mirrored variable: sig in (-right_bound, -left_bound).
  const double lx = p.x_inner.left_pole_bound();
  const double rx = p.x_inner.right_pole_bound();
  if (std::isfinite(lx)) cons.push_back({-1.0, 0.0, -lx});
  if (std::isfinite(rx)) cons.push_back({1.0, 0.0, rx});
  const double ly = p.y_inner.left_pole_bound();
  const double ry = p.y_inner.right_pole_bound();
  if (std::isfinite(ly)) cons.push_back({0.0, -1.0, -ly});
  if (std::isfinite(ry)) cons.push_back({0.0, 1.0, ry});
  // Coupled outer numerator Gammas must keep a positive real argument.
  for (std::size_t j = 0; j < p.outer_n; ++j) {
    const auto& [a, ax, ay] = p.outer_upper[j];
    cons.push_back({ax, ay, 1.0 - a});
  }
  return cons;
}

cplx ln_outer_kernel(const BivarFoxHParams& p, cplx s, cplx t) {
  cplx acc = 0.0;
  for (std::size_t j = 0; j < p.outer_upper.size(); ++j) {
    const auto& [a, ax, ay] = p.outer_upper[j];
    if (j < p.outer_n) {
      acc += ln_gamma(1.0 - a + ax * s + ay * t);
    } else {
      acc -= ln_gamma(a - ax * s - ay * t);
    }
  }
  for (const auto& [b, bx, by] : p.outer_lower) {
    acc -= ln_gamma(1.0 - b + bx * s + by * t);
  }
  return acc;
}

cplx safe_exp(cplx ln_val) {
  if (ln_val.real() < -745.0) return 0.0;
  return std::exp(ln_val);
}

// Kernel evaluation with the denominator-pole guard (the kernel has a zero
// there; numerator poles cannot be hit on a separating contour).
template <class F>
cplx guarded(F&& f) {
  try {
    return f();
  } catch (const std::domain_error&) {
    return cplx(0.0, 0.0);
  }
}

}  // namespace

void BivarFoxHParams::validate() const {
  if (outer_n > outer_upper.size()) {
    throw std::invalid_argument(
        "BivarFoxHParams: outer_n exceeds outer_upper size");
  }
  for (const auto& [a, ax, ay] : outer_upper) {
    (void)a;
    if (!(ax >= 0.0) || !(ay >= 0.0) || (ax == 0.0 && ay == 0.0)) {
      throw std::invalid_argument(
          "BivarFoxHParams: outer weights must be non-negative, not both 0");
    }
  }
  x_inner.validate();
  y_inner.validate();
}

BivarHEvalResult fox_h_bivariate(const BivarFoxHParams& params, double x,
                                 double y, const ContourSpec& contour_x,
                                 const ContourSpec& contour_y) {
  params.validate();
  contour_x.validate();
  contour_y.validate();
  if (!(x > 0.0) || !(y > 0.0)) {
    throw std::domain_error("fox_h_bivariate: arguments must be > 0");
  }

  double sig_s, sig_t;
  if (!std::isnan(contour_x.real_part) && !std::isnan(contour_y.real_part)) {
    sig_s = contour_x.real_part;
    sig_t = contour_y.real_part;
    for (const Constraint& c : separation_constraints(params)) {
      if (c.eval(sig_s, sig_t) <= 0.0) {
        throw ContourInfeasible(
            "fox_h_bivariate: requested contours violate pole separation");
      }
    }
  } else {
    std::tie(sig_s, sig_t) = chebyshev_center(separation_constraints(params));
  }

  const double ln_x = std::log(x);
  const double ln_y = std::log(y);

  BivarHEvalResult out;
  out.contour_re_s = sig_s;
  out.contour_re_t = sig_t;

  long nodes = 0;
  bool inner_all_converged = true;
  double inner_max_rel = 0.0;
  double inner_scale = 0.0;  // largest |inner integral| seen so far
  double tx = contour_x.half_height;

  auto inner_integral = [&](cplx t) -> cplx {
    auto f = [&](double tau_s) -> cplx {
      const cplx s(sig_s, tau_s);
      return guarded([&] {
        return safe_exp(ln_outer_kernel(params, s, t) +
                        ln_fox_h_kernel(params.x_inner, -s) + s * ln_x);
      });
    };
    for (int grow = 0;; ++grow) {
      const double abs_floor = 1e-3 * contour_x.rel_tol * inner_scale;
      const auto q = integrate_adaptive<cplx>(f, -tx, tx, contour_x.rel_tol,
                                              abs_floor, contour_x.max_nodes);
      nodes += q.nodes + 2;
      const double mag = std::abs(q.value);
      const double tail = std::max(std::abs(f(-tx)), std::abs(f(tx))) * tx;
      const bool tail_ok =
          tail <= contour_x.rel_tol / 10.0 *
                      std::max({mag, 1e-3 * inner_scale, 1e-300});
      if (tail_ok || grow >= 4) {
        inner_all_converged = inner_all_converged && q.converged && tail_ok;
        inner_scale = std::max(inner_scale, mag);
        if (mag > 0.0 && mag >= 1e-6 * inner_scale) {
          inner_max_rel = std::max(inner_max_rel, q.abs_error / mag);
        }
        return q.value;
      }
      tx *= 2.0;  // sticky: later calls start from the grown height
    }
  };

  auto outer_integrand = [&](double tau_t) -> cplx {
    const cplx t(sig_t, tau_t);
    cplx ln_w;
    try {
      ln_w = ln_fox_h_kernel(params.y_inner, -t) + t * ln_y;
    } catch (const std::domain_error&) {
      return cplx(0.0);  // denominator pole: the weight has a zero
    }
    if (ln_w.real() < -745.0) return cplx(0.0);
    return std::exp(ln_w) * inner_integral(t);
  };

  // Pilot at the contour center primes the inner magnitude scale so that
  // off-center inner integrals can use an absolute tolerance floor.
  (void)outer_integrand(0.0);

  double ty = contour_y.half_height;
  QuadResult<cplx> quad;
  bool tail_ok = false;
  for (int grow = 0; grow < 5; ++grow) {
    quad = integrate_adaptive<cplx>(outer_integrand, -ty, ty,
                                    contour_y.rel_tol, 0.0,
                                    contour_y.max_nodes);
    const double edge = std::max(std::abs(outer_integrand(-ty)),
                                 std::abs(outer_integrand(ty)));
    const double tail = edge * ty;
    if (tail <= contour_y.rel_tol / 10.0 *
                    std::max(std::abs(quad.value), 1e-300)) {
      tail_ok = true;
      break;
    }
    ty *= 2.0;
  }

  const double abs_val = std::abs(quad.value);
  out.value = quad.value.real() / kFourPiSq;
  out.imag_residue =
      abs_val > 0.0 ? std::abs(quad.value.imag()) / abs_val : 0.0;
  const double outer_rel =
      abs_val > 0.0 ? quad.abs_error / abs_val : quad.abs_error;
  out.est_rel_error = std::max(outer_rel, inner_max_rel);
  out.converged = quad.converged && tail_ok && inner_all_converged;
  out.nodes = nodes;
  return out;
}

}  // namespace rfuwoc::specfn
