// SPDX-FileCopyrightText: 2026 charvar contributors
// SPDX-License-Identifier: Apache-2.0
//
// Bases of the degree-m kernel of F(d/dx) made of m-th powers of linear
// forms at sampled points of the characteristic variety, expansion of kernel
// elements in such bases, the mu_i(t) coordinate functions, and moment
// matrices of the form integral mu_i(u) u^(j-1) e^(s0 u) du.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "charvar/curves.hpp"
#include "charvar/homogeneous.hpp"
#include "charvar/linalg.hpp"

namespace charvar {

/// Raised when sampled variety points persistently fail the rank
/// certification; carries the offending points.
class DegenerateConfigurationError : public std::runtime_error {
 public:
  DegenerateConfigurationError(const std::string& what,
                               std::vector<std::vector<Complex>> points)
      : std::runtime_error(what), points_(std::move(points)) {}

  const std::vector<std::vector<Complex>>& points() const { return points_; }

 private:
  std::vector<std::vector<Complex>> points_;
};

/// A certified basis { (xi_i . x)^m : i = 1..r } of the degree-m kernel of
/// F(d/dx), with r = kernel_dimension_predicted.  Points are stored with
/// unit sup-norm: the projective scale of a sampled point is otherwise
/// arbitrary, and mu coordinates depend on the representative, so the
/// normalization is part of the contract.
struct PowerBasis {
  HomogeneousPoly<Complex> F;
  int m = 0;
  std::vector<std::vector<Complex>> params;  ///< chart parameters of each point
  std::vector<std::vector<Complex>> points;  ///< sup-normalized ambient points
  std::vector<HomogeneousPoly<Complex>> powers;
  int r = 0;
  unsigned long long seed = 0;
};

/// Sample r = kernel_dimension_predicted points from the chart (seeded),
/// certify that the r x C(m+d-1, d-1) coefficient matrix of their m-th
/// powers has numerical rank r, resampling up to 3 times, and return the
/// basis.  Throws DegenerateConfigurationError if certification keeps
/// failing.
PowerBasis build_power_basis(const HomogeneousPoly<Complex>& F, int m, const CurveChart& chart,
                             unsigned long long seed = kDefaultSeed);

struct ExpandResult {
  bool in_kernel = false;  ///< false: P rejected, coeffs empty
  std::vector<Complex> coeffs;
  double kernel_residual = 0.0;          ///< |F(d/dx)P|_sup relative to scale
  double reconstruction_residual = 0.0;  ///< coefficientwise, relative to |P|
};

/// Expand a degree-m kernel element P as sum_i p_i (xi_i . x)^m by least
/// squares.  P is first checked for kernel membership (relative tolerance
/// 1e-6); failing that, the result reports the rejection.  A reconstruction
/// residual above 1e-6 with P in the kernel signals an ill-conditioned basis
/// and throws.
ExpandResult expand_in_basis(const PowerBasis& basis, const HomogeneousPoly<Complex>& P);

/// The coordinate functions mu(t) expressing the chart's running power
/// (xi(t) . x)^m in the basis: solves the linear system with residual at
/// most 1e-8 (relative) or throws.  The chart point is sup-normalized with
/// the same convention as the basis points.
std::vector<Complex> mu_coordinates(const PowerBasis& basis, const CurveChart& chart,
                                    std::span<const Complex> t);

struct MomentReport {
  Matrix<Complex> theta{0, 0};  ///< theta(j, i) = integral mu_i(u) u^(j-1) e^(s0 u) du
  double abs_det = 0.0;
  double condition = 0.0;  ///< sigma_max / sigma_min, inf when singular
  /// |det| <= 1e-10 * Hadamard bound, or sigma_min <= 1e-10 * sigma_max.
  bool singular = false;
};

/// The r x r moment matrix of Lemma-type pairings against u^(j-1) e^(s0 u)
/// on [a, b], by Gauss-Legendre quadrature.  Singularity is a reported
/// outcome (prompting a different s0), never an error.
MomentReport moment_matrix(const std::vector<std::function<Complex(double)>>& mu, double a,
                           double b, double s0, int quad_nodes = 200);

}  // namespace charvar
