// SPDX-FileCopyrightText: 2026 charvar contributors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "doctest.h"

#include "charvar/dixon.hpp"
#include "charvar/integral_rep.hpp"
#include "charvar/kernel.hpp"
#include "charvar/linalg.hpp"

namespace {

using charvar::BigRational;
using charvar::Complex;
using charvar::GaussianRational;
using charvar::HomogeneousPoly;

constexpr double kPi = 3.14159265358979323846;

// --- closed-form oracle -------------------------------------------------------
// integral over [-pi, pi] of (z + i x cos u + i y sin u)^2 du expands, using
// int cos^2 = int sin^2 = pi and the vanishing of the mixed first harmonics,
// to 2 pi z^2 - pi (x^2 + y^2).  Evaluated directly, with no library calls.
Complex squared_kernel_integral(double x, double y, double z) {
  return Complex(2.0 * kPi * z * z - kPi * (x * x + y * y), 0.0);
}

HomogeneousPoly<Complex> laplace_float() {
  HomogeneousPoly<Complex> f(3, 2);
  f.set_coeff({2, 0, 0}, Complex(1, 0));
  f.set_coeff({0, 2, 0}, Complex(1, 0));
  f.set_coeff({0, 0, 2}, Complex(1, 0));
  return f;
}

HomogeneousPoly<Complex> wave_float() {
  HomogeneousPoly<Complex> f(4, 2);
  f.set_coeff({2, 0, 0, 0}, Complex(1, 0));
  f.set_coeff({0, 2, 0, 0}, Complex(1, 0));
  f.set_coeff({0, 0, 2, 0}, Complex(1, 0));
  f.set_coeff({0, 0, 0, 2}, Complex(-1, 0));
  return f;
}

std::vector<std::vector<double>> unit_ball_points(int count, int dim, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-0.57, 0.57);
  std::vector<std::vector<double>> pts;
  for (int i = 0; i < count; ++i) {
    std::vector<double> p(dim);
    for (auto& c : p) c = u(rng);
    pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace

TEST_SUITE("integralrep") {
  TEST_CASE("harmonic representation of w^2 matches the closed form") {
    const auto chart = charvar::preset_chart("laplace");
    const auto profile = charvar::Profile::monomial(2);
    const auto rule = chart.default_rule(64);

    // Headline value at (1, 2, 3): 2*pi*9 - pi*5 = 13*pi.
    const std::vector<Complex> x123 = {Complex(1, 0), Complex(2, 0), Complex(3, 0)};
    const Complex v = charvar::represent(chart, profile, rule, x123);
    CHECK(std::abs(v - Complex(13.0 * kPi, 0.0)) <= 1e-12);
    CHECK(std::abs(v - squared_kernel_integral(1, 2, 3)) <= 1e-12);

    // Five more points against the closed form.
    std::mt19937_64 rng(0x1234ULL);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 5; ++i) {
      const double x = u(rng), y = u(rng), z = u(rng);
      const std::vector<Complex> pt = {Complex(x, 0), Complex(y, 0), Complex(z, 0)};
      CHECK(std::abs(charvar::represent(chart, profile, rule, pt) -
                     squared_kernel_integral(x, y, z)) <= 1e-10);
    }
  }

  TEST_CASE("zero profile represents the zero solution") {
    const auto chart = charvar::preset_chart("laplace");
    const auto profile = charvar::Profile::poly({Complex(0, 0)});
    const auto rule = chart.default_rule(16);
    const std::vector<Complex> x = {Complex(1, 0), Complex(-1, 0), Complex(2, 0)};
    CHECK(std::abs(charvar::represent(chart, profile, rule, x)) == 0.0);
  }

  TEST_CASE("node doubling converges spectrally on an entire profile") {
    // Phi(w) = e^w truncated as a degree-12 Taylor profile; the periodic
    // trapezoid error should collapse as the node count doubles.
    std::vector<Complex> taylor(13);
    double fact = 1.0;
    for (int k = 0; k <= 12; ++k) {
      if (k > 0) fact *= k;
      taylor[k] = Complex(1.0 / fact, 0.0);
    }
    const auto chart = charvar::preset_chart("laplace");
    const auto profile = charvar::Profile::poly(taylor);
    const std::vector<Complex> x = {Complex(0.3, 0), Complex(-0.2, 0), Complex(0.5, 0)};

    const Complex ref = charvar::represent(chart, profile, chart.default_rule(256), x);
    const double e8 = std::abs(charvar::represent(chart, profile, chart.default_rule(8), x) - ref);
    const double e16 =
        std::abs(charvar::represent(chart, profile, chart.default_rule(16), x) - ref);
    // Spectral decay: doubling the nodes must beat a factor of 10 (observed:
    // many orders of magnitude), with an absolute floor for roundoff.
    CHECK(e16 <= e8 / 10.0 + 1e-12);
  }

  TEST_CASE("represented harmonic solutions kill the Laplacian") {
    const auto chart = charvar::preset_chart("laplace");
    const auto pts = unit_ball_points(10, 3, 0xBA11ULL);

    for (int n = 0; n <= 4; ++n) {
      const auto v = charvar::representation(chart, charvar::Profile::monomial(n),
                                             chart.default_rule(48));
      const auto rep = charvar::pde_residual(laplace_float(), v, pts);
      CHECK(rep.max_abs_residual <= 1e-8);
      // The method string carries the stencil parameters; only the family
      // name is contractual.
      CHECK(rep.method.rfind("finite_difference", 0) == 0);
    }

    // A 12-term exponential profile is still annihilated to FD accuracy.
    std::vector<Complex> taylor(13);
    double fact = 1.0;
    for (int k = 0; k <= 12; ++k) {
      if (k > 0) fact *= k;
      taylor[k] = Complex(1.0 / fact, 0.0);
    }
    const auto ve = charvar::representation(chart, charvar::Profile::poly(taylor),
                                            chart.default_rule(64));
    const auto repe = charvar::pde_residual(laplace_float(), ve, pts);
    CHECK(repe.max_abs_residual <= 1e-7);
  }

  TEST_CASE("wave representation solves the wave equation") {
    const auto chart = charvar::preset_chart("wave");
    const auto pts = unit_ball_points(10, 4, 0x3A7EULL);
    for (int n = 0; n <= 4; ++n) {
      const auto v = charvar::representation(chart, charvar::Profile::monomial(n),
                                             chart.default_rule(24));
      const auto rep = charvar::pde_residual(wave_float(), v, pts);
      CHECK(rep.max_abs_residual <= 1e-6);
    }
  }

  TEST_CASE("whittaker helpers agree with the generic path") {
    // The laplace helper is the same integral with the classical kernel; at
    // a few points it must match the chart route on the monomial profile.
    const auto chart = charvar::preset_chart("laplace");
    const auto rule = chart.default_rule(64);
    const auto profile = charvar::Profile::monomial(2);
    for (const auto& p : unit_ball_points(5, 3, 0x77ULL)) {
      const Complex via_helper = charvar::whittaker_laplace(
          [](Complex w, double) { return w * w; }, p[0], p[1], p[2]);
      const std::vector<Complex> x = {Complex(p[0], 0), Complex(p[1], 0), Complex(p[2], 0)};
      const Complex via_chart = charvar::represent(chart, profile, rule, x);
      CHECK(std::abs(via_helper - via_chart) <= 1e-10);
    }

    // Wave helper headline: f(w) = w^3 at x = 0, t = 1 integrates to
    // int int (t + 0)^3 du dv = 4 pi^2 t^3 = 4 pi^2.
    const Complex w3 = charvar::whittaker_wave(
        [](Complex w, double, double) { return w * w * w; }, 0.0, 0.0, 0.0, 1.0);
    CHECK(std::abs(w3 - Complex(4.0 * kPi * kPi, 0.0)) <= 1e-9);

    // A w-independent integrand just measures the domain.
    const Complex flat = charvar::whittaker_wave(
        [](Complex, double, double) { return Complex(1.0, 0.0); }, 0.3, -0.2, 0.1, 0.7);
    CHECK(std::abs(flat - Complex(4.0 * kPi * kPi, 0.0)) <= 1e-10);
  }

  TEST_CASE("fermat representation: quadrature vs series oracle") {
    // Profile w^3 on the fermat chart at x = (1, 0, 0).  The canonical
    // chart point divides [c, s, -1] by its last coordinate, giving
    // w = -c(u), so the value is the line integral of (-c(u))^3 over the
    // path.  Recompute that integral directly from dixon_eval with a
    // Gauss-Legendre rule as the independent route.
    const auto chart = charvar::preset_chart("fermat");
    const auto profile = charvar::Profile::monomial(3);
    const auto rule = chart.default_rule(64);
    const std::vector<Complex> x = {Complex(1, 0), Complex(0, 0), Complex(0, 0)};
    const Complex via_chart = charvar::represent(chart, profile, rule, x);

    // Oracle: the documented path is the real segment [-0.9, 0.9]; integrate
    // (-c(u))^3 over it with a different node count so the two routes never
    // share a discretization.
    const auto gauss = charvar::gauss_legendre(96, -0.9, 0.9);
    Complex oracle(0, 0);
    for (std::size_t i = 0; i < gauss.nodes.size(); ++i) {
      const auto d = charvar::dixon_eval(Complex(gauss.nodes[i][0], 0.0));
      const Complex w = -d.c;
      oracle += gauss.weights[i] * w * w * w;
    }
    CHECK(std::abs(via_chart - oracle) <= 1e-10);

    // Stability in the node count: 48 vs 64 nodes agree.
    const Complex coarse = charvar::represent(chart, profile, chart.default_rule(48), x);
    CHECK(std::abs(via_chart - coarse) <= 1e-10);
  }

  TEST_CASE("exact harmonic fourier family: low orders") {
    using charvar::Parity;
    // n = 1, m = 1, cos: pi g_1 = integral (Z + iX cos + iY sin) cos du
    //                          = i pi X, so g_1 = i X.
    const auto g11 = charvar::harmonic_fourier_basis(1, 1, Parity::cos);
    HomogeneousPoly<GaussianRational> ix(3, 1);
    ix.set_coeff({1, 0, 0}, GaussianRational::i());
    CHECK(g11 == ix);

    // n = 1, m = 0, cos: pi g_0 = 2 pi Z / pi ... the m = 0 average is 2 Z.
    const auto g10 = charvar::harmonic_fourier_basis(1, 0, Parity::cos);
    HomogeneousPoly<GaussianRational> zz(3, 1);
    zz.set_coeff({0, 0, 1}, {2});
    CHECK(g10 == zz);

    // n = 1, m = 1, sin: pi h_1 = i pi Y.
    const auto h11 = charvar::harmonic_fourier_basis(1, 1, Parity::sin);
    HomogeneousPoly<GaussianRational> iy(3, 1);
    iy.set_coeff({0, 1, 0}, GaussianRational::i());
    CHECK(h11 == iy);
  }

  TEST_CASE("exact harmonic fourier family: structure for n = 2") {
    using charvar::Parity;
    HomogeneousPoly<GaussianRational> lap(3, 2);
    lap.set_coeff({2, 0, 0}, {1});
    lap.set_coeff({0, 2, 0}, {1});
    lap.set_coeff({0, 0, 2}, {1});

    std::vector<HomogeneousPoly<GaussianRational>> family;
    for (int m = 0; m <= 2; ++m) family.push_back(charvar::harmonic_fourier_basis(2, m, Parity::cos));
    for (int m = 1; m <= 2; ++m) family.push_back(charvar::harmonic_fourier_basis(2, m, Parity::sin));
    REQUIRE(family.size() == 5);

    // Each member is exactly harmonic, and the family spans the full
    // 2*2 + 1 = 5 dimensional harmonic space: its coefficient matrix over
    // Q(i) has rank 5.
    charvar::Matrix<GaussianRational> coeffs(5, 6);
    for (int i = 0; i < 5; ++i) {
      CHECK(charvar::apply_diff_operator(lap, family[i]).is_zero());
      const auto v = family[i].coeff_vector();
      for (int j = 0; j < 6; ++j) coeffs(i, j) = v[j];
    }
    CHECK(charvar::rank_nullspace(coeffs).rank == 5);
  }

  TEST_CASE("exact harmonic fourier family vs numeric angular integration") {
    using charvar::Parity;
    // Independent oracle: evaluate pi g_m(X,Y,Z) by the trapezoid rule on
    // (Z + iX cos u + iY sin u)^n cos(mu) at a few real points and compare
    // with the exact polynomial's value.
    const auto rule = charvar::periodic_trapezoid(64);
    std::mt19937_64 rng(0xFA3ULL);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int n = 1; n <= 5; ++n) {
      for (int m = 0; m <= n; ++m) {
        const auto g = charvar::harmonic_fourier_basis(n, m, Parity::cos);
        const auto gf = charvar::to_float(g);
        for (int trial = 0; trial < 3; ++trial) {
          const double x = u(rng), y = u(rng), z = u(rng);
          Complex acc(0, 0);
          for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double t = rule.nodes[i][0];
            const Complex w(z, x * std::cos(t) + y * std::sin(t));
            Complex wn(1, 0);
            for (int k = 0; k < n; ++k) wn *= w;
            acc += rule.weights[i] * wn * std::cos(m * t);
          }
          const std::vector<Complex> pt = {Complex(x, 0), Complex(y, 0), Complex(z, 0)};
          CHECK(std::abs(acc / kPi - gf.evaluate(pt)) <= 1e-10);
        }
      }
    }
  }

  TEST_CASE("exact harmonic fourier family: parity and top Z power") {
    using charvar::Parity;
    for (int n = 1; n <= 8; ++n) {
      for (int m = 0; m <= n; ++m) {
        const auto g = charvar::harmonic_fourier_basis(n, m, Parity::cos);
        for (const auto& [mono, c] : g.terms()) {
          CHECK(mono[1] % 2 == 0);   // even in Y
          CHECK(mono[2] <= n - m);   // top Z-power is Z^(n-m)
        }
        // The coefficient of X^m Z^(n-m) is nonzero (the classical leading
        // term), so the Z-power bound is attained.
        charvar::Monomial zm = {m, 0, n - m};
        CHECK(!g.coeff(zm).is_zero());
      }
      for (int m = 1; m <= n; ++m) {
        const auto h = charvar::harmonic_fourier_basis(n, m, Parity::sin);
        CHECK(!h.is_zero());
        for (const auto& [mono, c] : h.terms()) {
          CHECK(mono[1] % 2 == 1);   // odd in Y
          CHECK(mono[2] <= n - m);
        }
      }
    }
    CHECK_THROWS_AS((void)charvar::harmonic_fourier_basis(2, 3, Parity::cos),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)charvar::harmonic_fourier_basis(2, 0, Parity::sin),
                    std::invalid_argument);
  }

  TEST_CASE("exact residual: harmonic in, zero out; non-solution flagged") {
    const auto f = laplace_float();
    const auto pts = unit_ball_points(6, 3, 0x9E5ULL);

    HomogeneousPoly<Complex> harm(3, 2);
    harm.set_coeff({2, 0, 0}, Complex(1, 0));
    harm.set_coeff({0, 2, 0}, Complex(-1, 0));
    const auto good = charvar::pde_residual_exact(f, harm, pts);
    CHECK(good.max_abs_residual == 0.0);
    CHECK(good.method == "exact_symbolic");

    HomogeneousPoly<Complex> notharm(3, 2);
    notharm.set_coeff({2, 0, 0}, Complex(1, 0));
    const auto bad = charvar::pde_residual_exact(f, notharm, pts);
    CHECK(bad.max_abs_residual >= 0.5);
  }

  TEST_CASE("finite differences flag a non-solution") {
    const auto f = laplace_float();
    const auto pts = unit_ball_points(6, 3, 0xFD1ULL);
    const auto v = [](std::span<const double> x) { return Complex(x[0] * x[0], 0.0); };
    const auto rep = charvar::pde_residual(f, v, pts);
    CHECK(rep.max_abs_residual > 1e-8);
    // And a true harmonic passes at the same points.
    const auto h = [](std::span<const double> x) { return Complex(x[0] * x[0] - x[1] * x[1], 0.0); };
    CHECK(charvar::pde_residual(f, h, pts).max_abs_residual <= 1e-8);
  }

  TEST_CASE("out-of-domain quadrature nodes are rejected") {
    // The fermat chart is limited to |u| <= 1; a wider rule must throw.
    const auto chart = charvar::preset_chart("fermat");
    const auto wide = charvar::gauss_legendre(16, -3.0, 3.0);
    const auto profile = charvar::Profile::monomial(2);
    const std::vector<Complex> x = {Complex(1, 0), Complex(0, 0), Complex(0, 0)};
    CHECK_THROWS_AS((void)charvar::represent(chart, profile, wide, x), std::domain_error);
  }

  TEST_CASE("fourier profile: degree-zero trig data integrates the measure") {
    // Phi(w, t) = 1 (constant TrigPoly at degree 0) integrates to 2 pi on
    // the laplace circle path regardless of x.
    charvar::TrigPoly one;
    one.c0 = Complex(1.0, 0.0);
    const auto profile = charvar::Profile::fourier_profile({one});
    const auto chart = charvar::preset_chart("laplace");
    const std::vector<Complex> x = {Complex(0.4, 0), Complex(-1.0, 0), Complex(0.9, 0)};
    const Complex v = charvar::represent(chart, profile, chart.default_rule(32), x);
    CHECK(std::abs(v - Complex(2.0 * kPi, 0.0)) <= 1e-12);

    // Phi(w, t) = cos(t) * w integrates the first harmonic of the path:
    // non-trivial but still spectrally exact; just check stability.
    charvar::TrigPoly zero;
    charvar::TrigPoly cost;
    cost.cos_coeffs = {Complex(1.0, 0.0)};
    const auto prof2 = charvar::Profile::fourier_profile({zero, cost});
    const Complex a = charvar::represent(chart, prof2, chart.default_rule(32), x);
    const Complex b = charvar::represent(chart, prof2, chart.default_rule(64), x);
    CHECK(std::abs(a - b) <= 1e-12);
  }
}
