// SPDX-FileCopyrightText: 2026 charvar contributors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "doctest.h"

#include "charvar/kernel.hpp"
#include "charvar/power_basis.hpp"

namespace {

using charvar::Complex;
using charvar::HomogeneousPoly;

HomogeneousPoly<Complex> laplace_float() {
  HomogeneousPoly<Complex> f(3, 2);
  f.set_coeff({2, 0, 0}, Complex(1, 0));
  f.set_coeff({0, 2, 0}, Complex(1, 0));
  f.set_coeff({0, 0, 2}, Complex(1, 0));
  return f;
}

HomogeneousPoly<Complex> fermat_float() {
  HomogeneousPoly<Complex> f(3, 3);
  f.set_coeff({3, 0, 0}, Complex(1, 0));
  f.set_coeff({0, 3, 0}, Complex(1, 0));
  f.set_coeff({0, 0, 3}, Complex(1, 0));
  return f;
}

// Relative sup-norm distance between coefficient vectors of two polynomials.
double poly_distance(const HomogeneousPoly<Complex>& a, const HomogeneousPoly<Complex>& b) {
  auto diff = a;
  diff -= b;
  return diff.sup_coeff_norm() / std::max(a.sup_coeff_norm(), 1e-300);
}

}  // namespace

TEST_SUITE("powerbasis") {
  TEST_CASE("basis sizes match the predicted kernel dimension") {
    const auto chart = charvar::preset_chart("laplace");
    const auto f = laplace_float();
    for (int m = 1; m <= 4; ++m) {
      const auto basis = charvar::build_power_basis(f, m, chart);
      const auto predicted = charvar::kernel_dimension_predicted(3, 2, m).kernel_dim;
      CHECK(basis.r == predicted);
      CHECK(basis.points.size() == static_cast<std::size_t>(predicted));
      CHECK(basis.powers.size() == static_cast<std::size_t>(predicted));
      CHECK(basis.m == m);
      // Points are sup-normalized: largest coordinate magnitude exactly 1.
      for (const auto& p : basis.points) {
        double sup = 0.0;
        for (const auto& c : p) sup = std::max(sup, std::abs(c));
        CHECK(sup == doctest::Approx(1.0).epsilon(1e-12));
      }
      // Each power is annihilated by F(d/dx) up to roundoff.
      for (const auto& pw : basis.powers) {
        const auto img = charvar::apply_diff_operator(f, pw);
        CHECK(img.sup_coeff_norm() <= 1e-8 * std::max(pw.sup_coeff_norm(), 1.0));
      }
    }
    // Fermat cubic at m = 3: dimension 3*3 + 1 - 1 = 9.
    const auto fchart = charvar::preset_chart("fermat");
    const auto fb = charvar::build_power_basis(fermat_float(), 3, fchart);
    CHECK(fb.r == 9);
  }

  TEST_CASE("expanding harmonic polynomials in a degree-2 basis") {
    const auto chart = charvar::preset_chart("laplace");
    const auto f = laplace_float();
    const auto basis = charvar::build_power_basis(f, 2, chart);
    REQUIRE(basis.r == 5);

    // x^2 - y^2 is harmonic and must expand with a small residual.
    HomogeneousPoly<Complex> p(3, 2);
    p.set_coeff({2, 0, 0}, Complex(1, 0));
    p.set_coeff({0, 2, 0}, Complex(-1, 0));
    const auto ex = charvar::expand_in_basis(basis, p);
    REQUIRE(ex.in_kernel);
    CHECK(ex.kernel_residual <= 1e-10);
    CHECK(ex.reconstruction_residual <= 1e-8);
    REQUIRE(ex.coeffs.size() == 5);

    // Rebuild sum_i p_i (xi_i . x)^2 with independent arithmetic and compare.
    HomogeneousPoly<Complex> rebuilt(3, 2);
    for (int i = 0; i < 5; ++i) {
      auto term = basis.powers[i];
      term *= ex.coeffs[i];
      rebuilt += term;
    }
    CHECK(poly_distance(rebuilt, p) <= 1e-8);

    // x^2 alone is not harmonic: rejected, not silently expanded.
    HomogeneousPoly<Complex> bad(3, 2);
    bad.set_coeff({2, 0, 0}, Complex(1, 0));
    const auto exbad = charvar::expand_in_basis(basis, bad);
    CHECK(!exbad.in_kernel);
    CHECK(exbad.coeffs.empty());
  }

  TEST_CASE("every exact kernel element expands") {
    const auto chart = charvar::preset_chart("laplace");
    const auto f = laplace_float();
    const auto basis = charvar::build_power_basis(f, 3, chart);
    HomogeneousPoly<charvar::GaussianRational> lap(3, 2);
    lap.set_coeff({2, 0, 0}, {1});
    lap.set_coeff({0, 2, 0}, {1});
    lap.set_coeff({0, 0, 2}, {1});
    for (const auto& exact : charvar::kernel_basis(lap, 3)) {
      const auto p = charvar::to_float(exact);
      const auto ex = charvar::expand_in_basis(basis, p);
      REQUIRE(ex.in_kernel);
      CHECK(ex.reconstruction_residual <= 1e-6);
    }
  }

  TEST_CASE("expanding a basis power returns a coordinate vector") {
    const auto chart = charvar::preset_chart("laplace");
    const auto basis = charvar::build_power_basis(laplace_float(), 2, chart);
    const auto ex = charvar::expand_in_basis(basis, basis.powers[0]);
    REQUIRE(ex.in_kernel);
    REQUIRE(ex.coeffs.size() == static_cast<std::size_t>(basis.r));
    CHECK(std::abs(ex.coeffs[0] - Complex(1, 0)) <= 1e-8);
    for (int i = 1; i < basis.r; ++i) CHECK(std::abs(ex.coeffs[i]) <= 1e-8);
  }

  TEST_CASE("mu coordinates at a basis parameter give a unit vector") {
    const auto chart = charvar::preset_chart("laplace");
    const auto basis = charvar::build_power_basis(laplace_float(), 2, chart);
    const auto mu0 = charvar::mu_coordinates(basis, chart, basis.params[0]);
    REQUIRE(mu0.size() == static_cast<std::size_t>(basis.r));
    CHECK(std::abs(mu0[0] - Complex(1, 0)) <= 1e-8);
    for (int i = 1; i < basis.r; ++i) CHECK(std::abs(mu0[i]) <= 1e-8);
  }

  TEST_CASE("mu coordinates reconstruct the running power") {
    const auto chart = charvar::preset_chart("laplace");
    const auto basis = charvar::build_power_basis(laplace_float(), 2, chart);
    std::mt19937_64 rng(0x7E57ULL);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    for (int trial = 0; trial < 10; ++trial) {
      const std::vector<Complex> t = {Complex(angle(rng), 0.0)};
      const auto mu = charvar::mu_coordinates(basis, chart, t);
      // Independent reconstruction: sup-normalize the chart point, raise to
      // the m-th power, compare with sum_i mu_i (xi_i . x)^m.
      const auto raw = chart.map(t);
      const auto pt = charvar::sup_normalize(raw);
      const auto pw = charvar::power_of_linear_form<Complex>(pt, basis.m);
      HomogeneousPoly<Complex> sum(3, basis.m);
      for (int i = 0; i < basis.r; ++i) {
        auto term = basis.powers[i];
        term *= mu[i];
        sum += term;
      }
      CHECK(poly_distance(sum, pw) <= 1e-8);
    }
  }

  TEST_CASE("mu samples span exactly r directions") {
    // 50 sampled mu vectors as matrix rows: numerical rank must be r, no
    // more (they live in an r-dimensional space) and no less (the chart
    // points are in generic position).
    const auto chart = charvar::preset_chart("laplace");
    const auto basis = charvar::build_power_basis(laplace_float(), 2, chart);
    const int samples = 50;
    charvar::Matrix<Complex> rows(samples, basis.r);
    std::mt19937_64 rng(0xC0FFEEULL);
    std::uniform_real_distribution<double> angle(-3.1, 3.1);
    for (int i = 0; i < samples; ++i) {
      const std::vector<Complex> t = {Complex(angle(rng), 0.0)};
      const auto mu = charvar::mu_coordinates(basis, chart, t);
      for (int j = 0; j < basis.r; ++j) rows(i, j) = mu[j];
    }
    const auto rank = charvar::rank_nullspace(rows);
    CHECK(rank.rank == basis.r);
  }

  TEST_CASE("moment matrix: Hilbert-type hand example") {
    // mu = {1, u} on [0, 1] with s0 = 0 gives the 2x2 Hilbert matrix
    // [[1, 1/2], [1/2, 1/3]] with determinant 1/12.
    std::vector<std::function<Complex(double)>> mu = {
        [](double) { return Complex(1, 0); },
        [](double u) { return Complex(u, 0); },
    };
    const auto rep = charvar::moment_matrix(mu, 0.0, 1.0, 0.0);
    REQUIRE(rep.theta.rows() == 2);
    REQUIRE(rep.theta.cols() == 2);
    CHECK(std::abs(rep.theta(0, 0) - Complex(1.0, 0)) <= 1e-12);
    CHECK(std::abs(rep.theta(0, 1) - Complex(0.5, 0)) <= 1e-12);
    CHECK(std::abs(rep.theta(1, 0) - Complex(0.5, 0)) <= 1e-12);
    CHECK(std::abs(rep.theta(1, 1) - Complex(1.0 / 3.0, 0)) <= 1e-12);
    CHECK(rep.abs_det == doctest::Approx(1.0 / 12.0).epsilon(1e-10));
    CHECK(!rep.singular);
  }

  TEST_CASE("moment matrix: singularity is a reported outcome") {
    // mu = {sin, cos} on [-pi, pi] against {1, u} at s0 = 0: every entry
    // with matching parity vanishes and the determinant is exactly 0, so the
    // matrix is singular.  Shifting to s0 = 1 breaks the parity and the
    // matrix becomes invertible.  Singularity must be reported, not thrown.
    std::vector<std::function<Complex(double)>> mu = {
        [](double u) { return Complex(std::sin(u), 0); },
        [](double u) { return Complex(std::cos(u), 0); },
    };
    const double pi = 3.14159265358979323846;
    const auto at0 = charvar::moment_matrix(mu, -pi, pi, 0.0);
    CHECK(at0.singular);
    CHECK(at0.abs_det <= 1e-10);

    const auto at1 = charvar::moment_matrix(mu, -pi, pi, 1.0);
    CHECK(!at1.singular);
    CHECK(at1.abs_det > 1e-3);

    // Linearly dependent mu functions are singular for every s0.
    std::vector<std::function<Complex(double)>> dep = {
        [](double u) { return Complex(u, 0); },
        [](double u) { return Complex(2 * u, 0); },
    };
    CHECK(charvar::moment_matrix(dep, 0.0, 1.0, 1.0).singular);
  }

  TEST_CASE("degenerate sampling raises the dedicated error") {
    // A chart that keeps returning one constant point cannot certify a
    // rank-5 basis; the failure must carry the offending points.
    auto chart = charvar::preset_chart("laplace");
    chart.sample = [](std::mt19937_64&) {
      return std::vector<Complex>{Complex(0.0, 0.0)};
    };
    bool raised = false;
    try {
      (void)charvar::build_power_basis(laplace_float(), 2, chart);
    } catch (const charvar::DegenerateConfigurationError& e) {
      raised = true;
      CHECK(!e.points().empty());
    }
    CHECK(raised);
  }

  TEST_CASE("seeds reproduce the basis") {
    const auto chart = charvar::preset_chart("laplace");
    const auto a = charvar::build_power_basis(laplace_float(), 2, chart, 2024);
    const auto b = charvar::build_power_basis(laplace_float(), 2, chart, 2024);
    CHECK(a.seed == 2024);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
      for (int j = 0; j < 3; ++j) CHECK(a.points[i][j] == b.points[i][j]);
    }
  }
}
