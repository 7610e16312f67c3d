// SPDX-FileCopyrightText: 2026 charvar contributors
// SPDX-License-Identifier: Apache-2.0
//
// Forward integral representations of PDE solutions from charts on the
// characteristic variety: the generic V(x) = integral of Phi(xi(t) . x, t),
// Whittaker's harmonic formula, the wave-equation double integral, exact
// harmonic Fourier basis polynomials, and PDE-residual verification by
// symbol calculus or composed central finite differences.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "charvar/curves.hpp"
#include "charvar/homogeneous.hpp"
#include "charvar/quadrature.hpp"

namespace charvar {

/// Complex-coefficient trigonometric polynomial in one real parameter:
/// c0 + sum_j (cos_coeffs[j-1] cos(j t) + sin_coeffs[j-1] sin(j t)).
struct TrigPoly {
  Complex c0{0.0, 0.0};
  std::vector<Complex> cos_coeffs;
  std::vector<Complex> sin_coeffs;

  Complex eval(double t) const;
};

/// The integrand family Phi(w, t): a polynomial in the paired variable w
/// whose coefficients may depend on the path parameter t.
///
///   poly_in_w:    Phi(w, .) = sum_k w_coeffs[k] w^k        (t-independent)
///   fourier_poly: Phi(w, t) = sum_m fourier[m](t_1) w^m    (trig data in the
///                 first path coordinate)
///   series:       arbitrary evaluator Phi(w, t), degree bookkeeping only
struct Profile {
  enum class Kind { poly_in_w, fourier_poly, series };

  Kind kind = Kind::poly_in_w;
  std::vector<Complex> w_coeffs;
  std::vector<TrigPoly> fourier;
  std::function<Complex(Complex, std::span<const double>)> series;
  int max_degree = 0;

  Complex evaluate(Complex w, std::span<const double> path_point) const;

  /// Phi(w) = sum_k coeffs[k] w^k.
  static Profile poly(std::vector<Complex> coeffs);
  /// Phi(w) = w^m.
  static Profile monomial(int m);
  /// Phi(w, t) = sum_m per_degree[m](t) w^m.
  static Profile fourier_profile(std::vector<TrigPoly> per_degree);
  static Profile general(std::function<Complex(Complex, std::span<const double>)> f,
                         int max_degree);
};

/// The representation quadrature: sum over rule nodes of
/// weight * Phi(canonical_chart_point(t) . x, t).  Chart points are
/// canonicalized (last usable coordinate scaled to 1) so preset formulas
/// take their classical affine shapes.  Throws std::domain_error if a node
/// leaves the chart domain; deterministic given its inputs.
Complex represent(const CurveChart& chart, const Profile& profile, const QuadratureRule& rule,
                  std::span<const Complex> x);

/// The same representation packaged as an evaluable solution V(x) on real
/// points, for residual checks.
std::function<Complex(std::span<const double>)> representation(CurveChart chart, Profile profile,
                                                               QuadratureRule rule);

/// integral over [-pi, pi] of f(z + i x cos u + i y sin u, u) du by the
/// N-node periodic trapezoid rule; spectrally accurate for analytic f.
Complex whittaker_laplace(const std::function<Complex(Complex, double)>& f, double x, double y,
                          double z, int nodes = 64);

/// double integral over [-pi, pi]^2 of
/// f(t + x sin u cos v + y sin u sin v + z cos u, u, v) du dv by the N x N
/// product trapezoid rule.
Complex whittaker_wave(const std::function<Complex(Complex, double, double)>& f, double x,
                       double y, double z, double t, int nodes = 48);

enum class Parity { cos, sin };

/// Exact termwise angular integration of the classical harmonic family:
///   pi g_m(X,Y,Z) = integral (Z + iX cos u + iY sin u)^n cos(mu) du
/// (sin for h_m).  Requires 0 <= m <= n for cos, 1 <= m <= n for sin, and
/// n <= 20.  The g_m are even in Y and the h_m odd; the top Z-power is
/// Z^(n-m).
HomogeneousPoly<GaussianRational> harmonic_fourier_basis(int n, int m, Parity parity);

struct ResidualReport {
  HomogeneousPoly<Complex> symbol;
  std::vector<std::vector<double>> points;
  double max_abs_residual = 0.0;
  /// Normalization used (max over points); residuals are dimensionless.
  double scale = 1.0;
  std::string method;
};

/// |F(d/dx) V| at the points through the exact symbol calculus; V must be a
/// polynomial.  Residuals are normalized by max(1, termwise |.| sum).
ResidualReport pde_residual_exact(const HomogeneousPoly<Complex>& F,
                                  const HomogeneousPoly<Complex>& V,
                                  const std::vector<std::vector<double>>& points);

/// |F(d/dx) V| at the points with mixed partials realized as composed
/// per-axis central-difference stencils of the requested accuracy order
/// (default 4, h = 1e-3).  Symbols of total order above 4 switch to
/// h = 1e-2 with one Richardson extrapolation step to limit cancellation.
/// Residuals are normalized by scale = max(1, sum |weight * value|).
ResidualReport pde_residual(const HomogeneousPoly<Complex>& F,
                            const std::function<Complex(std::span<const double>)>& V,
                            const std::vector<std::vector<double>>& points, double h = 1e-3,
                            int order = 4);

}  // namespace charvar
