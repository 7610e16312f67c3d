// SPDX-FileCopyrightText: 2026 charvar contributors
// SPDX-License-Identifier: Apache-2.0
//
// Parametrized charts on characteristic varieties {F = 0}, univariate root
// finding, and numerical intersection of plane projective curves.
//
// A chart hands out raw projective coordinate representatives; consumers
// that need a fixed scale canonicalize (last coordinate 1) or sup-normalize
// explicitly.  Every preset's image satisfies its symbol to roughly machine
// precision, which the tests pin down.

#pragma once

#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "charvar/homogeneous.hpp"
#include "charvar/quadrature.hpp"

namespace charvar {

/// Default seed used when callers do not supply one.
inline constexpr unsigned long long kDefaultSeed = 0xC0FFEEULL;

struct CurveChart {
  std::string name;
  /// Ambient variable count d; points have d coordinates.
  int ambient_vars = 3;
  /// Intrinsic parameter count, d - 2 for a curve chart.
  int param_count = 1;
  std::string domain_description;
  std::function<bool(std::span<const Complex>)> in_domain;
  /// Parameter tuple -> raw projective coordinates on {F = 0}.
  std::function<std::vector<Complex>(std::span<const Complex>)> map;
  /// Embed a real path parameter tuple (angles for circles and tori, arc
  /// parameter for segment paths) into chart parameters.
  std::function<std::vector<Complex>(std::span<const double>)> path_param;
  /// Quadrature rule matching path_param, n nodes per path dimension.
  std::function<QuadratureRule(int)> default_rule;
  /// One random in-domain parameter tuple (used with a seeded engine).
  std::function<std::vector<Complex>(std::mt19937_64&)> sample;
  /// Floating form of the symbol F the image satisfies.
  HomogeneousPoly<Complex> symbol;

  std::vector<Complex> map_path(std::span<const double> path_point) const {
    const auto params = path_param(path_point);
    return map(params);
  }
};

/// |F(chart(t))| / |coords|_sup^(deg F), the scale-free residual of a chart
/// point against the chart's symbol.
double chart_residual(const CurveChart& chart, std::span<const Complex> params);

/// Preset charts:
///   laplace_quadric  u  -> [i(e^{2iu}+1), e^{2iu}-1, 2e^{iu}]      on x^2+y^2+z^2
///   wave_quadric (xi,xi') -> [(-1+xi^2)(1+xi'^2), -i(-1+xi^2)(-1+xi'^2),
///                             2i(1+xi^2) xi', 4i xi xi']           on x0^2+x1^2+x2^2-x3^2
///   fermat_cubic     u  -> [c(u), s(u), -1] with the Dixon pair    on x^3+y^3+z^3
/// Aliases "laplace", "wave", "fermat" are accepted.
CurveChart preset_chart(const std::string& name);

/// Chart on z_1 ... z_{n-1} = z_n^{n-1} in n >= 3 variables:
/// (t_1, ..., t_{n-2}) -> (t_1, ..., t_{n-2}, 1/(t_1 ... t_{n-2}), 1).
CurveChart product_hypersurface_chart(int nvars);

/// Exact symbol for a preset name ("product_hypersurface" requires nvars).
HomogeneousPoly<GaussianRational> preset_symbol(const std::string& name, int nvars = 0);

/// Chart t -> [t, eta(t), 1] on a plane curve {F = 0}, d = 3.  The branch
/// eta is the root of F(t0, eta, 1) with smallest argument in [0, 2*pi) at
/// the base point t0, continued by predictor-corrector tracking.  The domain
/// is a disc around t0 that stays clear of branch points (located through
/// the discriminant's roots).  Degenerate base points are retried from a
/// short list of shifted bases before failing.
CurveChart generic_plane_chart(const HomogeneousPoly<Complex>& F);

struct RootSet {
  std::vector<Complex> roots;
  std::vector<std::string> warnings;
};

/// All complex roots of sum_k coeffs[k] z^k by the Durand-Kerner iteration.
/// Near-zero leading coefficients are trimmed with a warning; root clusters
/// (likely multiplicities) and unconverged iterations are reported as
/// warnings.  The zero polynomial is rejected.
RootSet roots_univariate(std::span<const Complex> coeffs);

struct IntersectionSet {
  /// Canonicalized projective points, sorted lexicographically by
  /// coordinate (re, im) pairs for reproducibility.
  std::vector<std::vector<Complex>> points;
  std::vector<std::string> warnings;
  unsigned long long seed = 0;
};

/// All intersection points of two plane projective curves without common
/// components (checked probabilistically; sharing a component throws).
/// Pipeline: seeded random unitary coordinate change, dehomogenization,
/// resultant in one variable by evaluation at roots of unity and
/// interpolation, Durand-Kerner roots, back-substitution, Newton polish,
/// inverse coordinate change.  Counted with multiplicity, Bezout gives
/// deg F1 * deg F2 points; collapsed multiplicities are deduplicated and
/// reported in warnings.
IntersectionSet intersect_plane_curves(const HomogeneousPoly<Complex>& F1,
                                       const HomogeneousPoly<Complex>& F2,
                                       unsigned long long seed = kDefaultSeed);

/// F(A y) for a square matrix A acting on the variables; used for the
/// random coordinate changes in the intersection pipeline.
HomogeneousPoly<Complex> substitute_linear(const HomogeneousPoly<Complex>& F,
                                           const std::vector<std::vector<Complex>>& a);

}  // namespace charvar
