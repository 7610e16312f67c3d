// SPDX-FileCopyrightText: 2026 charvar contributors
// SPDX-License-Identifier: Apache-2.0

#include "charvar/linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace charvar {

namespace {

// ---------------------------------------------------------------------------
// Exact route.  Rows are scaled to Gaussian-integer form, then reduced with
// Bareiss' fraction-free elimination, whose divisions are exact in Z[i].

struct GInt {
  BigInt re, im;
  bool is_zero() const { return re == 0 && im == 0; }
};

GInt gmul(const GInt& a, const GInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GInt gsub(const GInt& a, const GInt& b) { return {a.re - b.re, a.im - b.im}; }

// a / b for exactly divisible Gaussian integers: a * conj(b) / |b|^2.
GInt gdiv_exact(const GInt& a, const GInt& b) {
  const BigInt n = b.re * b.re + b.im * b.im;
  const GInt t = gmul(a, {b.re, -b.im});
  return {t.re / n, t.im / n};
}

// Rough operand size used only to pick small pivots and slow coefficient
// growth; any deterministic choice would be correct.
std::size_t gsize(const GInt& v) {
  auto bits = [](const BigInt& x) {
    return x == 0 ? std::size_t{0} : mpz_sizeinbase(x.backend().data(), 2);
  };
  return bits(v.re) + bits(v.im);
}

GaussianRational to_rational(const GInt& v) {
  return {BigRational(v.re), BigRational(v.im)};
}

std::vector<std::vector<GInt>> clear_denominators(const Matrix<GaussianRational>& a) {
  std::vector<std::vector<GInt>> rows(a.rows(), std::vector<GInt>(a.cols()));
  for (int i = 0; i < a.rows(); ++i) {
    BigInt scale = 1;
    for (int j = 0; j < a.cols(); ++j) {
      scale = lcm(scale, denominator(a(i, j).re));
      scale = lcm(scale, denominator(a(i, j).im));
    }
    for (int j = 0; j < a.cols(); ++j) {
      const auto& c = a(i, j);
      rows[i][j] = {numerator(c.re) * (scale / denominator(c.re)),
                    numerator(c.im) * (scale / denominator(c.im))};
    }
  }
  return rows;
}

struct Echelon {
  std::vector<std::vector<GInt>> m;
  std::vector<int> pivot_cols;  // column of the pivot in row k
};

Echelon bareiss_echelon(std::vector<std::vector<GInt>> m, int rows, int cols) {
  Echelon ech;
  GInt prev{BigInt(1), BigInt(0)};
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int pivot = -1;
    std::size_t best = 0;
    for (int i = r; i < rows; ++i) {
      if (m[i][col].is_zero()) continue;
      const std::size_t sz = gsize(m[i][col]);
      if (pivot < 0 || sz < best) {
        pivot = i;
        best = sz;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        m[i][j] = gdiv_exact(gsub(gmul(m[r][col], m[i][j]), gmul(m[i][col], m[r][j])), prev);
      }
      m[i][col] = GInt{BigInt(0), BigInt(0)};
    }
    prev = m[r][col];
    ech.pivot_cols.push_back(col);
    ++r;
  }
  ech.m = std::move(m);
  return ech;
}

// ---------------------------------------------------------------------------
// Floating route, backed by Eigen's SVD.

Eigen::MatrixXcd to_eigen(const Matrix<Complex>& a) {
  Eigen::MatrixXcd m(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  }
  return m;
}

}  // namespace

double inf_norm(const Matrix<Complex>& a) {
  double best = 0.0;
  for (int i = 0; i < a.rows(); ++i) {
    double row = 0.0;
    for (int j = 0; j < a.cols(); ++j) row += std::abs(a(i, j));
    best = std::max(best, row);
  }
  return best;
}

double TolerancePolicy::threshold(double matrix_norm, int rows, int cols) const {
  const double factor =
      scale_factor >= 0.0 ? scale_factor : static_cast<double>(std::max(rows, cols));
  return absolute + factor * std::numeric_limits<double>::epsilon() * matrix_norm;
}

RankResult<GaussianRational> rank_nullspace(const Matrix<GaussianRational>& a) {
  RankResult<GaussianRational> out;
  out.tolerance_used = std::nullopt;
  const int rows = a.rows();
  const int cols = a.cols();
  Echelon ech = rows == 0 ? Echelon{{}, {}}
                          : bareiss_echelon(clear_denominators(a), rows, cols);
  out.rank = static_cast<int>(ech.pivot_cols.size());
  out.pivot_columns = ech.pivot_cols;

  std::vector<bool> is_pivot(cols, false);
  for (int c : ech.pivot_cols) is_pivot[c] = true;

  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<GaussianRational> v(cols, GaussianRational(0));
    v[f] = GaussianRational(1);
    // Back-substitute through the echelon rows, bottom up.
    for (int k = out.rank - 1; k >= 0; --k) {
      const int pc = ech.pivot_cols[k];
      GaussianRational acc(0);
      for (int j = pc + 1; j < cols; ++j) {
        if (v[j].is_zero() || ech.m[k][j].is_zero()) continue;
        acc += to_rational(ech.m[k][j]) * v[j];
      }
      v[pc] = -acc / to_rational(ech.m[k][pc]);
    }
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

RankResult<Complex> rank_nullspace(const Matrix<Complex>& a, const TolerancePolicy& policy) {
  RankResult<Complex> out;
  const int rows = a.rows();
  const int cols = a.cols();
  const double tol = policy.threshold(inf_norm(a), rows, cols);
  out.tolerance_used = tol;
  if (rows == 0 || cols == 0) {
    for (int j = 0; j < cols; ++j) {
      std::vector<Complex> v(cols, Complex(0, 0));
      v[j] = Complex(1, 0);
      out.nullspace.push_back(std::move(v));
    }
    return out;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(a), Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  int rank = 0;
  for (Eigen::Index k = 0; k < sigma.size(); ++k) {
    if (sigma(k) > tol) ++rank;
  }
  out.rank = rank;
  const auto& v = svd.matrixV();
  for (int j = rank; j < cols; ++j) {
    std::vector<Complex> vec(cols);
    for (int i = 0; i < cols; ++i) vec[i] = v(i, j);
    out.nullspace.push_back(std::move(vec));
  }
  // Pivot columns in the numerical sense: leading columns of a column-pivoted
  // QR factorization, reported for diagnostics.
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(to_eigen(a));
  const auto& perm = qr.colsPermutation().indices();
  for (int k = 0; k < rank && k < static_cast<int>(perm.size()); ++k) {
    out.pivot_columns.push_back(static_cast<int>(perm(k)));
  }
  return out;
}

SolveResult<GaussianRational> solve(const Matrix<GaussianRational>& a,
                                    std::span<const GaussianRational> b) {
  if (static_cast<int>(b.size()) != a.rows()) {
    throw std::invalid_argument("solve: rhs length != rows");
  }
  const int rows = a.rows();
  const int cols = a.cols();
  // Augmented rational Gauss elimination; sizes here are small enough that
  // fraction-free machinery is not worth the bookkeeping.
  std::vector<std::vector<GaussianRational>> m(rows,
                                               std::vector<GaussianRational>(cols + 1));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m[i][j] = a(i, j);
    m[i][cols] = b[i];
  }
  std::vector<int> pivot_cols;
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (!m[i][col].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    for (int i = r + 1; i < rows; ++i) {
      if (m[i][col].is_zero()) continue;
      const GaussianRational factor = m[i][col] / m[r][col];
      for (int j = col; j <= cols; ++j) m[i][j] -= factor * m[r][j];
    }
    pivot_cols.push_back(col);
    ++r;
  }
  SolveResult<GaussianRational> out;
  for (int i = r; i < rows; ++i) {
    if (!m[i][cols].is_zero()) {
      out.ok = false;
      out.residual = ScalarTraits<GaussianRational>::magnitude(m[i][cols]);
      return out;
    }
  }
  out.ok = true;
  out.x.assign(cols, GaussianRational(0));
  for (int k = static_cast<int>(pivot_cols.size()) - 1; k >= 0; --k) {
    const int pc = pivot_cols[k];
    GaussianRational acc = m[k][cols];
    for (int j = pc + 1; j < cols; ++j) {
      if (!out.x[j].is_zero()) acc -= m[k][j] * out.x[j];
    }
    out.x[pc] = acc / m[k][pc];
  }
  out.residual = 0.0;
  return out;
}

SolveResult<Complex> solve(const Matrix<Complex>& a, std::span<const Complex> b,
                           const TolerancePolicy& policy) {
  if (static_cast<int>(b.size()) != a.rows()) {
    throw std::invalid_argument("solve: rhs length != rows");
  }
  SolveResult<Complex> out;
  if (a.rows() == 0 || a.cols() == 0) {
    out.ok = true;
    out.x.assign(a.cols(), Complex(0, 0));
    double norm = 0.0;
    for (const auto& v : b) norm += std::norm(v);
    out.residual = std::sqrt(norm);
    return out;
  }
  const Eigen::MatrixXcd m = to_eigen(a);
  Eigen::VectorXcd rhs(a.rows());
  for (int i = 0; i < a.rows(); ++i) rhs(i) = b[i];
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(Eigen::NumTraits<double>::epsilon());  // rank cut below, by policy
  const double tol = policy.threshold(inf_norm(a), a.rows(), a.cols());
  const auto& sigma = svd.singularValues();
  Eigen::VectorXcd utb = svd.matrixU().adjoint() * rhs;
  Eigen::VectorXcd y = Eigen::VectorXcd::Zero(sigma.size());
  for (Eigen::Index k = 0; k < sigma.size(); ++k) {
    if (sigma(k) > tol) y(k) = utb(k) / sigma(k);
  }
  Eigen::VectorXcd x = svd.matrixV() * y;
  out.ok = true;
  out.x.resize(a.cols());
  for (int j = 0; j < a.cols(); ++j) out.x[j] = x(j);
  out.residual = (m * x - rhs).norm();
  return out;
}

}  // namespace charvar
