// SPDX-FileCopyrightText: 2026 charvar contributors
// SPDX-License-Identifier: Apache-2.0
//
// Dimension bookkeeping for kernels of constant-coefficient operators F(d/dx)
// acting on homogeneous polynomials, and the cohomology dimension formula for
// line bundles O(k) on complex projective space.

#pragma once

#include <vector>

#include "charvar/homogeneous.hpp"

namespace charvar {

struct KernelDims {
  /// Dimension of { P homogeneous of degree m : F(d/dx) P = 0 }.
  long long kernel_dim = 0;
  /// Dimension of the ambient space of degree-m forms, C(m + d - 1, d - 1).
  long long ambient_dim = 0;
};

/// Predicted kernel dimension for a degree-n symbol in d variables acting on
/// degree-m forms: C(m+d-1, d-1) - C(m-n+d-1, d-1) for m >= n, and the full
/// ambient dimension for m < n.  For d = 3 this simplifies to
/// m*n + 1 - (n-1)(n-2)/2, in particular 2m + 1 for the Laplacian.
KernelDims kernel_dimension_predicted(int d, int n, int m);

/// Exact basis of the degree-m kernel of F(d/dx), computed as the nullspace
/// of the coefficient matrix of F(d/dx): S_m -> S_{m-n} over Q(i).  Basis
/// elements are normalized so their leading (graded-lex first) coefficient
/// is 1.  The result size always matches kernel_dimension_predicted for
/// nonzero F.
std::vector<HomogeneousPoly<GaussianRational>> kernel_basis(
    const HomogeneousPoly<GaussianRational>& F, int m);

/// dim H^q(CP_n, O(k)): C(k+n, k) when q = 0 and k >= 0;
/// C(-k-1, -k-1-n) when q = n and k <= -n-1; 0 otherwise.
long long bott_dimension(int n, int k, int q);

}  // namespace charvar
