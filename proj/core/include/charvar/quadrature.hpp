// SPDX-FileCopyrightText: 2026 charvar contributors
// SPDX-License-Identifier: Apache-2.0
//
// Quadrature rules feeding the integral-representation layer: periodic
// trapezoid for closed circle/torus paths (spectrally accurate on smooth
// periodic integrands), Gauss-Legendre on finite intervals, and tensor
// products of one-dimensional rules.

#pragma once

#include <functional>
#include <vector>

#include "charvar/scalar.hpp"

namespace charvar {

struct QuadratureRule {
  enum class Kind { periodic_trapezoid, gauss_legendre, product };
  Kind kind = Kind::periodic_trapezoid;
  /// Real parameter tuples; tuple arity is 1 for line rules, 2+ for products.
  std::vector<std::vector<double>> nodes;
  std::vector<double> weights;

  int dimension() const { return nodes.empty() ? 0 : static_cast<int>(nodes.front().size()); }
  double weight_sum() const;
};

/// n equispaced nodes on [a, b) with weight (b - a) / n each; exact for
/// trigonometric polynomials of degree < n over a full period.
QuadratureRule periodic_trapezoid(int n, double a = -3.14159265358979323846,
                                  double b = 3.14159265358979323846);

/// n-point Gauss-Legendre rule on [a, b]; exact for polynomials of degree
/// 2n - 1.  Nodes by Newton iteration on the Legendre polynomial.
QuadratureRule gauss_legendre(int n, double a, double b);

/// Tensor product of two rules; node tuples concatenate, weights multiply.
QuadratureRule product_rule(const QuadratureRule& a, const QuadratureRule& b);

/// Integrate a complex-valued function of one real variable with the rule
/// (arity-1 rules only).
Complex integrate(const QuadratureRule& rule, const std::function<Complex(double)>& f);

}  // namespace charvar
