// SPDX-FileCopyrightText: 2026 charvar contributors
// SPDX-License-Identifier: Apache-2.0

#include "charvar/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace charvar {

double QuadratureRule::weight_sum() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

QuadratureRule periodic_trapezoid(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("periodic_trapezoid: need at least one node");
  if (!(b > a)) throw std::invalid_argument("periodic_trapezoid: empty interval");
  QuadratureRule rule;
  rule.kind = QuadratureRule::Kind::periodic_trapezoid;
  const double h = (b - a) / n;
  rule.nodes.reserve(n);
  rule.weights.assign(n, h);
  for (int k = 0; k < n; ++k) {
    rule.nodes.push_back({a + h * k});
  }
  return rule;
}

QuadratureRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  if (!(b > a)) throw std::invalid_argument("gauss_legendre: empty interval");
  QuadratureRule rule;
  rule.kind = QuadratureRule::Kind::gauss_legendre;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const int half_count = (n + 1) / 2;
  for (int i = 0; i < half_count; ++i) {
    // Chebyshev-like initial guess, then Newton on P_n.
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      // p0 = P_n(z); derivative from the standard identity.
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.nodes[i] = {mid - half * z};
    rule.nodes[n - 1 - i] = {mid + half * z};
    rule.weights[i] = half * w;
    rule.weights[n - 1 - i] = half * w;
  }
  return rule;
}

QuadratureRule product_rule(const QuadratureRule& a, const QuadratureRule& b) {
  QuadratureRule rule;
  rule.kind = QuadratureRule::Kind::product;
  rule.nodes.reserve(a.nodes.size() * b.nodes.size());
  rule.weights.reserve(a.nodes.size() * b.nodes.size());
  for (std::size_t i = 0; i < a.nodes.size(); ++i) {
    for (std::size_t j = 0; j < b.nodes.size(); ++j) {
      std::vector<double> node = a.nodes[i];
      node.insert(node.end(), b.nodes[j].begin(), b.nodes[j].end());
      rule.nodes.push_back(std::move(node));
      rule.weights.push_back(a.weights[i] * b.weights[j]);
    }
  }
  return rule;
}

Complex integrate(const QuadratureRule& rule, const std::function<Complex(double)>& f) {
  if (rule.dimension() != 1) {
    throw std::invalid_argument("integrate: rule must have one-dimensional nodes");
  }
  Complex acc(0.0, 0.0);
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    acc += rule.weights[k] * f(rule.nodes[k][0]);
  }
  return acc;
}

}  // namespace charvar
