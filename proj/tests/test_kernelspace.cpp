// SPDX-FileCopyrightText: 2026 charvar contributors
// SPDX-License-Identifier: Apache-2.0

#include <vector>

#include "doctest.h"

#include "charvar/kernel.hpp"

namespace {

using charvar::BigRational;
using charvar::GaussianRational;
using charvar::HomogeneousPoly;

GaussianRational gi(long long re, long long im = 0) {
  return {BigRational(re), BigRational(im)};
}

HomogeneousPoly<GaussianRational> laplace_symbol() {
  HomogeneousPoly<GaussianRational> f(3, 2);
  f.set_coeff({2, 0, 0}, gi(1));
  f.set_coeff({0, 2, 0}, gi(1));
  f.set_coeff({0, 0, 2}, gi(1));
  return f;
}

// --- oracles -----------------------------------------------------------------

long long factorial_ll(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Euler characteristic of O(k) on CP_n is prod_{i=1..n} (k+i) / n!, an exact
// integer for every integer k.  Independent of the case split inside
// bott_dimension, it pins the alternating sum of all the h^q.
long long euler_characteristic(int n, int k) {
  long long num = 1;
  for (int i = 1; i <= n; ++i) num *= (k + i);
  return num / factorial_ll(n);
}

}  // namespace

TEST_SUITE("kernelspace") {
  TEST_CASE("predicted dimensions: closed form vs binomial difference") {
    // d = 3 closed form m*n + 1 - (n-1)(n-2)/2 checked against the general
    // binomial difference the header documents; two independent routes.
    for (int n = 1; n <= 5; ++n) {
      for (int m = n; m <= 9; ++m) {
        const auto dims = charvar::kernel_dimension_predicted(3, n, m);
        const long long closed = static_cast<long long>(m) * n + 1 -
                                 static_cast<long long>(n - 1) * (n - 2) / 2;
        CHECK(dims.kernel_dim == closed);
        const long long ambient = charvar::binomial(m + 2, 2);
        const long long image = charvar::binomial(m - n + 2, 2);
        CHECK(dims.ambient_dim == ambient);
        CHECK(dims.kernel_dim == ambient - image);
      }
    }
    // Below the symbol degree the operator annihilates everything.
    const auto low = charvar::kernel_dimension_predicted(3, 3, 2);
    CHECK(low.kernel_dim == low.ambient_dim);
    CHECK(low.ambient_dim == 6);
  }

  TEST_CASE("headline dimension counts") {
    CHECK(charvar::kernel_dimension_predicted(3, 2, 4).kernel_dim == 9);
    CHECK(charvar::kernel_dimension_predicted(3, 3, 3).kernel_dim == 9);
    CHECK(charvar::kernel_dimension_predicted(4, 3, 3).kernel_dim == 19);
    CHECK(charvar::kernel_dimension_predicted(3, 2, 0).kernel_dim == 1);
  }

  TEST_CASE("harmonic polynomials in low degree") {
    const auto lap = laplace_symbol();

    // Degree 1: all of x, y, z (dimension 3).
    const auto b1 = charvar::kernel_basis(lap, 1);
    REQUIRE(b1.size() == 3);
    for (const auto& p : b1) {
      CHECK(charvar::apply_diff_operator(lap, p).is_zero());
      CHECK(p.degree() == 1);
    }

    // Degree 2: dimension 5, and each basis element is exactly harmonic.
    const auto b2 = charvar::kernel_basis(lap, 2);
    REQUIRE(b2.size() == 5);
    for (const auto& p : b2) {
      CHECK(charvar::apply_diff_operator(lap, p).is_zero());
    }

    // Degree counts follow 2m + 1 for a range of m.
    for (int m = 0; m <= 6; ++m) {
      const auto b = charvar::kernel_basis(lap, m);
      CHECK(b.size() == static_cast<std::size_t>(2 * m + 1));
    }
  }

  TEST_CASE("quaternary cubic symbol") {
    // x1*x2*x3 - x4^3 in four variables, kernel at m = 3 has dimension 19.
    HomogeneousPoly<GaussianRational> f(4, 3);
    f.set_coeff({1, 1, 1, 0}, gi(1));
    f.set_coeff({0, 0, 0, 3}, gi(-1));
    const auto basis = charvar::kernel_basis(f, 3);
    CHECK(basis.size() == 19);
    CHECK(charvar::kernel_dimension_predicted(4, 3, 3).kernel_dim == 19);
    for (const auto& p : basis) {
      CHECK(charvar::apply_diff_operator(f, p).is_zero());
    }
  }

  TEST_CASE("basis normalization: leading coefficient one") {
    const auto lap = laplace_symbol();
    const auto basis = charvar::kernel_basis(lap, 3);
    REQUIRE(basis.size() == 7);
    for (const auto& p : basis) {
      REQUIRE(!p.is_zero());
      // First stored term is the graded-lex leading term; its coefficient
      // must be exactly 1.
      CHECK(p.terms().begin()->second == gi(1));
    }
  }

  TEST_CASE("below symbol degree the kernel is everything") {
    const auto lap = laplace_symbol();
    const auto b = charvar::kernel_basis(lap, 1);
    CHECK(b.size() == charvar::monomial_basis(3, 1).size());
    HomogeneousPoly<GaussianRational> cubic(3, 3);
    cubic.set_coeff({3, 0, 0}, gi(1));
    cubic.set_coeff({0, 3, 0}, gi(1));
    cubic.set_coeff({0, 0, 3}, gi(1));
    CHECK(charvar::kernel_basis(cubic, 2).size() == 6);
  }

  TEST_CASE("cohomology dimensions: hand values") {
    CHECK(charvar::bott_dimension(2, 3, 0) == 10);
    CHECK(charvar::bott_dimension(2, -3, 2) == 1);
    CHECK(charvar::bott_dimension(2, -3, 0) == 0);
    CHECK(charvar::bott_dimension(2, -3, 1) == 0);
    CHECK(charvar::bott_dimension(1, -2, 1) == 1);
    CHECK(charvar::bott_dimension(1, -1, 0) == 0);
    CHECK(charvar::bott_dimension(1, -1, 1) == 0);
    CHECK(charvar::bott_dimension(3, 0, 0) == 1);
  }

  TEST_CASE("cohomology dimensions: Euler characteristic oracle") {
    for (int n = 1; n <= 5; ++n) {
      for (int k = -12; k <= 12; ++k) {
        long long chi = 0;
        for (int q = 0; q <= n; ++q) {
          const long long h = charvar::bott_dimension(n, k, q);
          CHECK(h >= 0);
          chi += (q % 2 == 0) ? h : -h;
        }
        CHECK(chi == euler_characteristic(n, k));
      }
    }
  }

  TEST_CASE("cohomology dimensions: duality oracle") {
    for (int n = 1; n <= 4; ++n) {
      for (int k = -10; k <= 10; ++k) {
        for (int q = 0; q <= n; ++q) {
          CHECK(charvar::bott_dimension(n, k, q) ==
                charvar::bott_dimension(n, -k - n - 1, n - q));
        }
      }
    }
  }

  TEST_CASE("global sections count monomials") {
    for (int n = 1; n <= 4; ++n) {
      for (int k = 0; k <= 6; ++k) {
        CHECK(charvar::bott_dimension(n, k, 0) ==
              static_cast<long long>(charvar::monomial_basis(n + 1, k).size()));
      }
    }
  }

  TEST_CASE("vanishing range between 0 and n") {
    for (int k = -12; k <= 12; ++k) {
      CHECK(charvar::bott_dimension(3, k, 1) == 0);
      CHECK(charvar::bott_dimension(3, k, 2) == 0);
    }
    // q = 0 vanishes for negative twists; q = n vanishes above -n-1.
    CHECK(charvar::bott_dimension(3, -1, 0) == 0);
    CHECK(charvar::bott_dimension(3, -3, 3) == 0);
    CHECK(charvar::bott_dimension(3, -4, 3) == 1);
  }
}
