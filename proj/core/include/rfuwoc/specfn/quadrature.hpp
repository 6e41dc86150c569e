// Copyright (c) 2026 the rfuwoc authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <queue>
#include <vector>

namespace rfuwoc::specfn {

template <class V>
struct QuadResult {
  V value{};
  double abs_error = 0.0;   // estimated
  int nodes = 0;            // integrand evaluations
  bool converged = false;
};

namespace detail {

// 15-point Kronrod / 7-point Gauss pair (positive half, QUADPACK dqk15).
inline constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline constexpr double kWgk[8] = {
    0.02293532201052922, 0.06309209262997855, 0.10479001032225018,
    0.14065325971552592, 0.16900472663926790, 0.19035057806478541,
    0.20443294007529889, 0.20948214108472783};
inline constexpr double kWg[4] = {
    0.12948496616886969, 0.27970539148927664, 0.38183005050511894,
    0.41795918367346939};

inline double vnorm(double x) { return std::abs(x); }
inline double vnorm(const std::complex<double>& x) { return std::abs(x); }

template <class F, class V>
void gk15(F&& f, double a, double b, V& integral, double& error) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  V fv[15];
  for (int j = 0; j < 7; ++j) {
    fv[j] = f(c - h * kXgk[j]);
    fv[14 - j] = f(c + h * kXgk[j]);
  }
  fv[7] = f(c);
  V resk = kWgk[7] * fv[7];
  V resg = kWg[3] * fv[7];
  for (int j = 0; j < 7; ++j) {
    resk += kWgk[j] * (fv[j] + fv[14 - j]);
  }
  for (int j = 0; j < 3; ++j) {
    const int i = 2 * j + 1;
    resg += kWg[j] * (fv[i] + fv[14 - i]);
  }
  integral = resk * h;
  error = vnorm((resk - resg) * h);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b].
///
/// The worst segment (largest local error estimate) is bisected until the
/// accumulated error estimate drops below max(abs_tol, rel_tol*|I|) or the
/// evaluation budget is exhausted. The final sum runs over segments ordered
/// by position with compensated accumulation, so a given input always
/// produces bit-identical output.
template <class V, class F>
QuadResult<V> integrate_adaptive(F&& f, double a, double b, double rel_tol,
                                 double abs_tol, int max_evals) {
  struct Segment {
    double a, b, err;
    V val;
  };
  QuadResult<V> out;
  std::vector<Segment> segs;
  auto cmp = [&segs](std::size_t i, std::size_t j) {
    return segs[i].err < segs[j].err;
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(cmp)>
      heap(cmp);

  Segment s0{a, b, 0.0, V{}};
  detail::gk15(f, a, b, s0.val, s0.err);
  out.nodes = 15;
  segs.push_back(s0);
  heap.push(0);

  double total_err = s0.err;
  V total_val = s0.val;

  auto tolerance = [&]() {
    return std::max(abs_tol, rel_tol * detail::vnorm(total_val));
  };

  while (total_err > tolerance() && out.nodes + 30 <= max_evals) {
    const std::size_t idx = heap.top();
    heap.pop();
    const Segment cur = segs[idx];
    const double mid = 0.5 * (cur.a + cur.b);
    if (mid <= cur.a || mid >= cur.b) {
      continue;  // interval at machine resolution
    }
    Segment left{cur.a, mid, 0.0, V{}};
    Segment right{mid, cur.b, 0.0, V{}};
    detail::gk15(f, left.a, left.b, left.val, left.err);
    detail::gk15(f, right.a, right.b, right.val, right.err);
    out.nodes += 30;
    total_err += left.err + right.err - cur.err;
    total_val += left.val + right.val - cur.val;
    segs[idx] = left;
    heap.push(idx);
    segs.push_back(right);
    heap.push(segs.size() - 1);
  }

  // Order-fixed compensated resummation.
  std::sort(segs.begin(), segs.end(),
            [](const Segment& x, const Segment& y) { return x.a < y.a; });
  V sum{};
  V comp{};
  double err = 0.0;
  for (const Segment& s : segs) {
    const V y = s.val - comp;
    const V t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    err += s.err;
  }
  out.value = sum;
  out.abs_error = err;
  out.converged = err <= std::max(abs_tol, rel_tol * detail::vnorm(sum));
  return out;
}

/// Adaptive integration of f over [0, inf) for integrands with (at least)
/// exponential tail decay. The interval is mapped through gamma = u/(1-u).
template <class V, class F>
QuadResult<V> integrate_zero_to_inf(F&& f, double rel_tol, double abs_tol,
                                    int max_evals) {
  auto g = [&f](double u) {
    const double om = 1.0 - u;
    const double x = u / om;
    return f(x) * (1.0 / (om * om));
  };
  // Stay epsilon short of u = 1; the integrand must vanish there.
  return integrate_adaptive<V>(g, 0.0, 1.0 - 1e-14, rel_tol, abs_tol,
                               max_evals);
}

}  // namespace rfuwoc::specfn
