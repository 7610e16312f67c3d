// SPDX-FileCopyrightText: 2026 charvar contributors
// SPDX-License-Identifier: Apache-2.0
//
// Plane-geometry theorems as executable checks: syzygies among r-th powers
// of linear forms (Serret), curves through point sets, Cayley-Bacharach
// verification with its degree-(gamma-3) exception, and the L = A F + B G
// decomposition.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charvar/curves.hpp"
#include "charvar/homogeneous.hpp"
#include "charvar/linalg.hpp"

namespace charvar {

/// Result of the syzygy search among { (l_p_i)^r }.  If `syzygy` is present
/// it satisfies | sum_i lambda_i (l_p_i)^r | <= 1e-8 * scale, and
/// `all_coeffs_nonzero` says whether a relation with every coefficient
/// nonzero was found (searched by randomized nullspace combinations, 100
/// trials; tolerance 1e-9 * |lambda|_inf in the floating domain).
template <class K>
struct SyzygyReport {
  std::vector<std::vector<K>> points;
  int r = 0;
  int nullspace_dim = 0;
  std::optional<std::vector<K>> syzygy;
  bool all_coeffs_nonzero = false;
};

SyzygyReport<Complex> serret_syzygy(const std::vector<std::vector<Complex>>& points, int r,
                                    unsigned long long seed = kDefaultSeed);
SyzygyReport<GaussianRational> serret_syzygy(
    const std::vector<std::vector<GaussianRational>>& points, int r,
    unsigned long long seed = kDefaultSeed);

/// All degree-`degree` forms vanishing on the given points: the nullspace of
/// the evaluation matrix.  An empty result (dimension 0) is a valid outcome.
/// The float overload accepts a rank-threshold policy for points that carry
/// more error than roundoff (e.g. numerically recovered intersections).
std::vector<HomogeneousPoly<Complex>> curves_through_points(
    int degree, const std::vector<std::vector<Complex>>& points,
    const TolerancePolicy& policy = {});
std::vector<HomogeneousPoly<GaussianRational>> curves_through_points(
    int degree, const std::vector<std::vector<GaussianRational>>& points);

struct CBReport {
  int m = 0;
  int n = 0;
  int gamma = 0;
  std::vector<std::vector<Complex>> intersection;  ///< the mn points of F1 . F2
  std::vector<int> removed;                        ///< indices of the e removed points
  int curve_count = 0;      ///< dim of degree-(m+n-gamma) curves through the rest
  double max_abs_value = 0.0;  ///< worst normalized value at a removed point
  bool all_vanish = false;     ///< every curve vanishes at every removed point
  bool exception_fires = false;  ///< removed points lie on a degree-(gamma-3) curve
  bool applicable = true;        ///< false when no curve exists to test (vacuous)
  std::vector<std::string> warnings;
  unsigned long long seed = 0;
};

/// The Cayley-Bacharach pipeline: intersect F1 and F2 into mn points, remove
/// e = (gamma-1)(gamma-2)/2 of them (randomly unless `removed_indices` is
/// given), compute all degree-(m+n-gamma) curves through the remainder, and
/// evaluate them at the removed points (vanishing tolerance 1e-6, with
/// evaluations normalized by |coeffs| * |point|^deg).  Independently reports
/// whether the removed points lie on a curve of degree gamma-3, the
/// exception case.
CBReport cayley_bacharach_check(const HomogeneousPoly<Complex>& F1,
                                const HomogeneousPoly<Complex>& F2, int gamma,
                                unsigned long long seed = kDefaultSeed,
                                const std::optional<std::vector<int>>& removed_indices = {});

struct AFBGResult {
  HomogeneousPoly<Complex> A;
  HomogeneousPoly<Complex> B;
  double residual = 0.0;  ///< coefficientwise, relative to the operand scale
};

/// Decompose L = A F + B G by solving for the coefficients of A and B.
/// Requires deg L >= max(deg F, deg G); the returned pair satisfies the
/// identity coefficientwise to 1e-8 * scale or the call throws.  The pair is
/// not unique (the syzygy (-G) F + F G = 0 can be added); only the identity
/// is certified.
AFBGResult afbg_decompose(const HomogeneousPoly<Complex>& L, const HomogeneousPoly<Complex>& F,
                          const HomogeneousPoly<Complex>& G);

}  // namespace charvar
