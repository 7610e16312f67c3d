// SPDX-FileCopyrightText: 2026 charvar contributors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <complex>

#include "doctest.h"

#include "charvar/quadrature.hpp"

namespace {

using charvar::Complex;

constexpr double kPi = 3.14159265358979323846;

}  // namespace

TEST_SUITE("quadrature") {
  TEST_CASE("periodic trapezoid kills low harmonics exactly") {
    const auto rule = charvar::periodic_trapezoid(8);
    REQUIRE(rule.nodes.size() == 8);
    CHECK(rule.dimension() == 1);
    CHECK(rule.weight_sum() == doctest::Approx(2.0 * kPi).epsilon(1e-15));

    // Integral of cos(k u) over a period vanishes for 1 <= k < n.
    for (int k = 1; k <= 7; ++k) {
      double acc = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        acc += rule.weights[i] * std::cos(k * rule.nodes[i][0]);
      }
      CHECK(std::abs(acc) <= 1e-13);
    }

    // cos^2 integrates to pi: the rule is exact on degree-2 trig polynomials.
    double sq = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double c = std::cos(rule.nodes[i][0]);
      sq += rule.weights[i] * c * c;
    }
    CHECK(sq == doctest::Approx(kPi).epsilon(1e-14));
  }

  TEST_CASE("periodic trapezoid on a shifted interval") {
    const auto rule = charvar::periodic_trapezoid(16, 0.0, 2.0 * kPi);
    CHECK(rule.weight_sum() == doctest::Approx(2.0 * kPi).epsilon(1e-15));
    for (const auto& node : rule.nodes) {
      CHECK(node[0] >= 0.0);
      CHECK(node[0] < 2.0 * kPi);
    }
  }

  TEST_CASE("Gauss-Legendre is exact on low-degree polynomials") {
    // Two nodes integrate cubics exactly: int_0^1 t^3 dt = 1/4.
    const auto g2 = charvar::gauss_legendre(2, 0.0, 1.0);
    double cubic = 0.0;
    for (std::size_t i = 0; i < g2.nodes.size(); ++i) {
      const double t = g2.nodes[i][0];
      cubic += g2.weights[i] * t * t * t;
    }
    CHECK(cubic == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(g2.weight_sum() == doctest::Approx(1.0).epsilon(1e-15));
  }

  TEST_CASE("Gauss-Legendre converges spectrally on the exponential") {
    const auto g = charvar::gauss_legendre(12, -1.0, 1.0);
    double acc = 0.0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      acc += g.weights[i] * std::exp(g.nodes[i][0]);
    }
    const double exact = std::exp(1.0) - std::exp(-1.0);
    // 12-point Gauss-Legendre is far beyond machine precision for e^x; the
    // bound only needs headroom for summation roundoff.
    CHECK(std::abs(acc - exact) <= 5e-14);
  }

  TEST_CASE("product rule integrates a separable integrand") {
    const auto u = charvar::periodic_trapezoid(12);
    const auto v = charvar::periodic_trapezoid(12);
    const auto uv = charvar::product_rule(u, v);
    CHECK(uv.dimension() == 2);
    CHECK(uv.nodes.size() == 144);
    CHECK(uv.weight_sum() == doctest::Approx(4.0 * kPi * kPi).epsilon(1e-13));

    // int int sin^2(u) cos^2(v) du dv = pi * pi.
    double acc = 0.0;
    for (std::size_t i = 0; i < uv.nodes.size(); ++i) {
      const double su = std::sin(uv.nodes[i][0]);
      const double cv = std::cos(uv.nodes[i][1]);
      acc += uv.weights[i] * su * su * cv * cv;
    }
    CHECK(acc == doctest::Approx(kPi * kPi).epsilon(1e-13));
  }

  TEST_CASE("complex integrate helper") {
    const auto rule = charvar::periodic_trapezoid(32);
    // int e^{iu} du = 0 over a period.
    const Complex osc =
        charvar::integrate(rule, [](double t) { return std::exp(Complex(0.0, t)); });
    CHECK(std::abs(osc) <= 1e-13);
    // Constant integrand picks up the full measure.
    const Complex full = charvar::integrate(rule, [](double) { return Complex(1.0, -2.0); });
    CHECK(std::abs(full - Complex(2.0 * kPi, -4.0 * kPi)) <= 1e-12);
  }

  TEST_CASE("invalid node counts throw") {
    CHECK_THROWS_AS((void)charvar::periodic_trapezoid(0), std::invalid_argument);
    CHECK_THROWS_AS((void)charvar::gauss_legendre(0, 0.0, 1.0), std::invalid_argument);
  }
}
