// SPDX-FileCopyrightText: 2026 charvar contributors
// SPDX-License-Identifier: Apache-2.0
//
// Dense linear algebra over the two scalar domains.
//
// The exact route (GaussianRational entries) uses fraction-free Gaussian
// elimination; its ranks and nullspaces are certain and serve as the
// authority for all dimension counts.  The floating route reports the
// tolerance it used, with the default threshold max(rows, cols) * eps * |A|.

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "charvar/scalar.hpp"

namespace charvar {

template <class K>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  K& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const K& operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  static Matrix from_rows(const std::vector<std::vector<K>>& rows) {
    if (rows.empty()) return Matrix(0, 0);
    Matrix out(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int i = 0; i < out.rows(); ++i) {
      if (rows[i].size() != rows.front().size()) {
        throw std::invalid_argument("Matrix::from_rows: ragged rows");
      }
      for (int j = 0; j < out.cols(); ++j) out(i, j) = rows[i][j];
    }
    return out;
  }

  std::vector<K> multiply(std::span<const K> x) const {
    if (static_cast<int>(x.size()) != cols_) {
      throw std::invalid_argument("Matrix::multiply: size mismatch");
    }
    std::vector<K> out(rows_, ScalarTraits<K>::zero());
    for (int i = 0; i < rows_; ++i) {
      K acc = ScalarTraits<K>::zero();
      for (int j = 0; j < cols_; ++j) acc += (*this)(i, j) * x[j];
      out[i] = acc;
    }
    return out;
  }

 private:
  int rows_, cols_;
  std::vector<K> data_;
};

/// Entrywise max-magnitude norm used by the default rank threshold.
double inf_norm(const Matrix<Complex>& a);

/// Threshold policy for treating floating pivots / singular values as zero.
struct TolerancePolicy {
  /// Multiplies eps * |A|; negative means "use max(rows, cols)".
  double scale_factor = -1.0;
  /// Absolute floor added on top of the relative term.
  double absolute = 0.0;

  double threshold(double matrix_norm, int rows, int cols) const;
};

template <class K>
struct RankResult {
  int rank = 0;
  /// Basis of the right nullspace, one vector per column of deficiency.
  std::vector<std::vector<K>> nullspace;
  std::vector<int> pivot_columns;
  /// Threshold actually used; std::nullopt for the exact domain.
  std::optional<double> tolerance_used;
};

template <class K>
struct SolveResult {
  bool ok = false;
  std::vector<K> x;
  /// Euclidean residual |Ax - b|; exactly 0.0 for a consistent exact solve,
  /// and the size of the violated pivot equation when an exact solve fails.
  double residual = 0.0;
};

/// Exact rank and nullspace via fraction-free (Bareiss) elimination over
/// Gaussian integers after clearing denominators row by row.
RankResult<GaussianRational> rank_nullspace(const Matrix<GaussianRational>& a);

/// Floating rank and nullspace via singular value decomposition; singular
/// values below policy.threshold(|A|) count as zero.
RankResult<Complex> rank_nullspace(const Matrix<Complex>& a, const TolerancePolicy& policy = {});

/// Exact linear solve (one particular solution, free variables set to 0).
/// Inconsistent systems return ok = false and the magnitude of the violated
/// equation as residual.
SolveResult<GaussianRational> solve(const Matrix<GaussianRational>& a,
                                    std::span<const GaussianRational> b);

/// Floating least-squares solve minimizing |Ax - b|, SVD based.
SolveResult<Complex> solve(const Matrix<Complex>& a, std::span<const Complex> b,
                           const TolerancePolicy& policy = {});

}  // namespace charvar
