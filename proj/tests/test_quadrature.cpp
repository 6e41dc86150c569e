// Copyright (c) 2026 the rfuwoc authors
// SPDX-License-Identifier: Apache-2.0
#include "rfuwoc/specfn/quadrature.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include <doctest.h>

#include "test_util.hpp"

using rfuwoc::specfn::integrate_adaptive;
using rfuwoc::specfn::integrate_zero_to_inf;
using rfuwoc::test::rel_err;

TEST_CASE("gaussian integral") {
  auto f = [](double x) { return std::exp(-x * x); };
  const auto r = integrate_adaptive<double>(f, -8.0, 8.0, 1e-12, 0.0, 100000);
  CHECK(r.converged);
  CHECK(rel_err(r.value, std::sqrt(std::numbers::pi)) <= 1e-12);
}

TEST_CASE("endpoint algebraic singularity") {
  auto f = [](double x) { return 1.0 / std::sqrt(x); };
  const auto r = integrate_adaptive<double>(f, 1e-300, 1.0, 1e-9, 0.0,
                                            400000);
  CHECK(rel_err(r.value, 2.0) <= 1e-7);
}

TEST_CASE("oscillatory complex integrand") {
  // int_-T^T exp(i w x) dx = 2 sin(wT)/w
  const double w = 13.7, big_t = 25.0;
  auto f = [&](double x) {
    return std::exp(std::complex<double>(0.0, w * x));
  };
  const auto r = integrate_adaptive<std::complex<double>>(f, -big_t, big_t,
                                                          1e-12, 0.0, 200000);
  CHECK(r.converged);
  CHECK(std::abs(r.value - 2.0 * std::sin(w * big_t) / w) <= 1e-10);
}

TEST_CASE("semi-infinite map") {
  auto f = [](double x) { return std::exp(-x) * x * x; };
  const auto r = integrate_zero_to_inf<double>(f, 1e-11, 0.0, 400000);
  CHECK(rel_err(r.value, 2.0) <= 1e-9);
}

TEST_CASE("budget exhaustion flags non-convergence") {
  auto f = [](double x) { return std::cos(200.0 * x); };
  const auto r = integrate_adaptive<double>(f, 0.0, 30.0, 1e-14, 0.0, 60);
  CHECK_FALSE(r.converged);
}

TEST_CASE("repeat evaluation is bit-identical") {
  auto f = [](double x) { return std::sin(3.0 * x) / (1.0 + x * x); };
  const auto a = integrate_adaptive<double>(f, -10.0, 10.0, 1e-12, 0.0,
                                            100000);
  const auto b = integrate_adaptive<double>(f, -10.0, 10.0, 1e-12, 0.0,
                                            100000);
  CHECK(a.value == b.value);
}
