// SPDX-FileCopyrightText: 2026 charvar contributors
// SPDX-License-Identifier: Apache-2.0

#include <bit>
#include <complex>
#include <random>
#include <vector>

#include "doctest.h"

#include "charvar/linalg.hpp"

namespace {

using charvar::BigRational;
using charvar::Complex;
using charvar::GaussianRational;
using charvar::Matrix;

GaussianRational gi(long long re, long long im = 0) {
  return {BigRational(re), BigRational(im)};
}

// --- oracle: rank by exhaustive minor expansion ------------------------------
// Exact determinant of the submatrix picked out by row/column index lists,
// via Laplace expansion.  Only used for matrices up to 4x4, where the cost
// is trivial and the logic is independent of the elimination code under test.

GaussianRational det_on(const Matrix<GaussianRational>& a, const std::vector<int>& rs,
                        const std::vector<int>& cs) {
  const int k = static_cast<int>(rs.size());
  if (k == 1) return a(rs[0], cs[0]);
  GaussianRational acc = gi(0);
  for (int j = 0; j < k; ++j) {
    std::vector<int> sub_cols;
    for (int t = 0; t < k; ++t) {
      if (t != j) sub_cols.push_back(cs[t]);
    }
    std::vector<int> sub_rows(rs.begin() + 1, rs.end());
    GaussianRational term = a(rs[0], cs[j]) * det_on(a, sub_rows, sub_cols);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

int rank_by_minors(const Matrix<GaussianRational>& a) {
  const int r = a.rows(), c = a.cols();
  for (int k = std::min(r, c); k >= 1; --k) {
    for (unsigned rm = 0; rm < (1u << r); ++rm) {
      if (std::popcount(rm) != k) continue;
      std::vector<int> rs;
      for (int i = 0; i < r; ++i) {
        if (rm & (1u << i)) rs.push_back(i);
      }
      for (unsigned cm = 0; cm < (1u << c); ++cm) {
        if (std::popcount(cm) != k) continue;
        std::vector<int> cs;
        for (int j = 0; j < c; ++j) {
          if (cm & (1u << j)) cs.push_back(j);
        }
        if (!det_on(a, rs, cs).is_zero()) return k;
      }
    }
  }
  return 0;
}

Matrix<GaussianRational> random_exact(int rows, int cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-3, 3);
  Matrix<GaussianRational> a(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) a(i, j) = gi(entry(rng), entry(rng));
  }
  return a;
}

double vec_norm(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

}  // namespace

TEST_SUITE("linear") {
  TEST_CASE("oracle sanity on hand matrices") {
    Matrix<GaussianRational> id(3, 3);
    for (int i = 0; i < 3; ++i) id(i, i) = gi(1);
    CHECK(rank_by_minors(id) == 3);

    Matrix<GaussianRational> sing(2, 2);
    sing(0, 0) = gi(1);
    sing(0, 1) = gi(2);
    sing(1, 0) = gi(2);
    sing(1, 1) = gi(4);
    CHECK(rank_by_minors(sing) == 1);
  }

  TEST_CASE("exact rank of the identity") {
    Matrix<GaussianRational> id(4, 4);
    for (int i = 0; i < 4; ++i) id(i, i) = gi(1);
    const auto r = charvar::rank_nullspace(id);
    CHECK(r.rank == 4);
    CHECK(r.nullspace.empty());
    CHECK(r.pivot_columns.size() == 4);
    CHECK(!r.tolerance_used.has_value());
  }

  TEST_CASE("exact nullspace of a duplicated column") {
    // Third column repeats the first, so (1, 0, -1) spans the kernel.
    Matrix<GaussianRational> a(3, 3);
    for (int i = 0; i < 3; ++i) {
      a(i, 0) = gi(i + 1, 1);
      a(i, 1) = gi(2 * i - 1);
      a(i, 2) = a(i, 0);
    }
    const auto r = charvar::rank_nullspace(a);
    CHECK(r.rank == 2);
    REQUIRE(r.nullspace.size() == 1);
    const auto img = a.multiply(r.nullspace[0]);
    for (const auto& v : img) CHECK(v.is_zero());
  }

  TEST_CASE("six points on a conic give a rank-5 evaluation matrix") {
    // Rows are the degree-2 monomials x^2, xy, xz, y^2, yz, z^2 evaluated at
    // [1, t, t^2], six distinct t.  Every row is orthogonal to y^2 - xz, so
    // the rank is at most 5; two irreducible conics cannot share six points,
    // so the kernel is exactly one-dimensional.
    const long long ts[] = {-3, -1, 0, 1, 2, 5};
    Matrix<GaussianRational> a(6, 6);
    for (int i = 0; i < 6; ++i) {
      const GaussianRational t = gi(ts[i]);
      const GaussianRational x = gi(1), y = t, z = t * t;
      const GaussianRational row[] = {x * x, x * y, x * z, y * y, y * z, z * z};
      for (int j = 0; j < 6; ++j) a(i, j) = row[j];
    }
    const auto r = charvar::rank_nullspace(a);
    CHECK(r.rank == 5);
    REQUIRE(r.nullspace.size() == 1);
    // The kernel vector must be proportional to (0, 0, -1, 1, 0, 0).
    const auto& v = r.nullspace[0];
    CHECK(v[0].is_zero());
    CHECK(v[1].is_zero());
    CHECK(v[4].is_zero());
    CHECK(v[5].is_zero());
    CHECK(v[2] == -v[3]);
    CHECK(!v[3].is_zero());
  }

  TEST_CASE("exact rank matches the minor oracle on random matrices") {
    std::mt19937_64 rng(0xC0FFEEULL);
    std::uniform_int_distribution<int> dim(1, 4);
    for (int trial = 0; trial < 30; ++trial) {
      const int rows = dim(rng), cols = dim(rng);
      auto a = random_exact(rows, cols, rng);
      // Half the trials get a forced dependency to exercise deficient ranks.
      if (trial % 2 == 0 && rows >= 2) {
        for (int j = 0; j < cols; ++j) a(rows - 1, j) = a(0, j) * gi(2, -1);
      }
      const auto r = charvar::rank_nullspace(a);
      CHECK(r.rank == rank_by_minors(a));
      CHECK(static_cast<int>(r.nullspace.size()) == cols - r.rank);
      CHECK(static_cast<int>(r.pivot_columns.size()) == r.rank);
      for (const auto& v : r.nullspace) {
        for (const auto& entry : a.multiply(v)) CHECK(entry.is_zero());
      }
    }
  }

  TEST_CASE("exact solve on the identity returns b") {
    Matrix<GaussianRational> id(3, 3);
    for (int i = 0; i < 3; ++i) id(i, i) = gi(1);
    const std::vector<GaussianRational> b = {gi(2, 1), gi(-3), gi(0, 5)};
    const auto s = charvar::solve(id, b);
    REQUIRE(s.ok);
    CHECK(s.residual == 0.0);
    for (int i = 0; i < 3; ++i) CHECK(s.x[i] == b[i]);
  }

  TEST_CASE("exact Vandermonde solve matches Lagrange interpolation") {
    // Quadratic through (0,1), (1,2), (2,4).  The Lagrange form gives the
    // coefficients independently of the elimination code.
    const long long ts[] = {0, 1, 2};
    const long long bs[] = {1, 2, 4};
    Matrix<GaussianRational> a(3, 3);
    std::vector<GaussianRational> b;
    for (int i = 0; i < 3; ++i) {
      const GaussianRational t = gi(ts[i]);
      a(i, 0) = gi(1);
      a(i, 1) = t;
      a(i, 2) = t * t;
      b.push_back(gi(bs[i]));
    }
    // Lagrange oracle: accumulate b_i * prod_{j != i} (t - t_j) / (t_i - t_j)
    // as a coefficient vector (c0, c1, c2).
    std::vector<GaussianRational> lagrange(3, gi(0));
    for (int i = 0; i < 3; ++i) {
      std::vector<GaussianRational> num = {gi(1)};  // polynomial 1
      GaussianRational den = gi(1);
      for (int j = 0; j < 3; ++j) {
        if (j == i) continue;
        // num *= (t - ts[j])
        std::vector<GaussianRational> next(num.size() + 1, gi(0));
        for (std::size_t k = 0; k < num.size(); ++k) {
          next[k] += num[k] * gi(-ts[j]);
          next[k + 1] += num[k];
        }
        num = std::move(next);
        den *= gi(ts[i] - ts[j]);
      }
      for (std::size_t k = 0; k < num.size(); ++k) {
        lagrange[k] += gi(bs[i]) * num[k] / den;
      }
    }
    CHECK(lagrange[0] == gi(1));
    CHECK(lagrange[1] == GaussianRational(BigRational(1, 2)));
    CHECK(lagrange[2] == GaussianRational(BigRational(1, 2)));

    const auto s = charvar::solve(a, b);
    REQUIRE(s.ok);
    CHECK(s.residual == 0.0);
    for (int k = 0; k < 3; ++k) CHECK(s.x[k] == lagrange[k]);
  }

  TEST_CASE("inconsistent exact system reports failure") {
    Matrix<GaussianRational> a(2, 1);
    a(0, 0) = gi(1);
    a(1, 0) = gi(1);
    const std::vector<GaussianRational> b = {gi(1), gi(2)};
    const auto s = charvar::solve(a, b);
    CHECK(!s.ok);
    CHECK(s.residual > 0.0);
  }

  TEST_CASE("floating least squares recovers an exact solution") {
    std::mt19937_64 rng(0xFEEDULL);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix<Complex> a(5, 3);
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 3; ++j) a(i, j) = Complex(u(rng), u(rng));
    }
    const std::vector<Complex> x_true = {Complex(0.5, -1.0), Complex(2.0, 0.25),
                                         Complex(-0.75, 0.0)};
    const auto b = a.multiply(x_true);
    const auto s = charvar::solve(a, b);
    REQUIRE(s.ok);
    CHECK(s.residual <= 1e-10);
    std::vector<Complex> diff(3);
    for (int j = 0; j < 3; ++j) diff[j] = s.x[j] - x_true[j];
    CHECK(vec_norm(diff) <= 1e-10);
  }

  TEST_CASE("floating rank detects a two-dimensional kernel") {
    // Sum of two outer products: rank 2 by construction.
    std::mt19937_64 rng(0xD00DULL);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Complex> p(4), q(4), r1(4), r2(4);
    for (int i = 0; i < 4; ++i) {
      p[i] = Complex(u(rng), u(rng));
      q[i] = Complex(u(rng), u(rng));
      r1[i] = Complex(u(rng), u(rng));
      r2[i] = Complex(u(rng), u(rng));
    }
    Matrix<Complex> a(4, 4);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) a(i, j) = p[i] * r1[j] + q[i] * r2[j];
    }
    const auto res = charvar::rank_nullspace(a);
    CHECK(res.rank == 2);
    REQUIRE(res.nullspace.size() == 2);
    CHECK(res.tolerance_used.has_value());
    for (const auto& v : res.nullspace) {
      CHECK(vec_norm(a.multiply(v)) <= 1e-10);
    }
  }
}
