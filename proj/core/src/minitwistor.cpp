// SPDX-FileCopyrightText: 2026 charvar contributors
// SPDX-License-Identifier: Apache-2.0

#include "charvar/minitwistor.hpp"

#include <cmath>
#include <stdexcept>

#include "charvar/quadrature.hpp"

namespace charvar {

namespace {

double dot3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

}  // namespace

OrientedLine line_to_ts2(const std::array<double, 3>& u, const std::array<double, 3>& v) {
  const double norm = std::sqrt(dot3(u, u));
  if (std::abs(norm - 1.0) > 1e-9) {
    throw std::invalid_argument("line_to_ts2: direction must be a unit vector");
  }
  const double along = dot3(v, u);
  OrientedLine line;
  line.u = u;
  for (int i = 0; i < 3; ++i) line.v[i] = v[i] - along * u[i];
  return line;
}

std::pair<Complex, Complex> chart_coordinates(const OrientedLine& line) {
  const double denom = 1.0 - line.u[2];
  if (std::abs(denom) < 1e-12) {
    throw std::domain_error("chart_coordinates: the north pole u3 = 1 lies outside this chart");
  }
  const Complex uc(line.u[0], line.u[1]);
  const Complex vc(line.v[0], line.v[1]);
  const Complex xi = uc / denom;
  const Complex eta = vc / denom + uc * line.v[2] / (denom * denom);
  return {xi, eta};
}

bool RealSection::is_real(double tol) const {
  return std::abs(a + std::conj(c)) <= tol && std::abs(b.imag()) <= tol;
}

RealSection real_section_of_point(const std::array<double, 3>& p) {
  RealSection s;
  s.a = Complex(p[0], p[1]) / 2.0;
  s.b = Complex(p[2], 0.0);
  s.c = -Complex(p[0], -p[1]) / 2.0;
  return s;
}

std::array<double, 3> point_of_real_section(const RealSection& section) {
  return {2.0 * section.a.real(), 2.0 * section.a.imag(), section.b.real()};
}

std::pair<Complex, Complex> tau(Complex xi, Complex eta) {
  if (std::abs(xi) < 1e-300) {
    throw std::domain_error("tau: xi = 0 lies outside the chart overlap");
  }
  const Complex xibar = std::conj(xi);
  return {-1.0 / xibar, -std::conj(eta) / (xibar * xibar)};
}

JohnResult john_transform(const std::function<Complex(double, double, double)>& f, double s,
                          double x, double y, double z, double T, int nodes) {
  if (T <= 0.0) throw std::invalid_argument("john_transform: truncation must be positive");
  JohnResult out;
  const auto rule = gauss_legendre(nodes, -T, T);
  double sup = 0.0;
  for (std::size_t k = 0; k < rule.weights.size(); ++k) {
    const double t = rule.nodes[k][0];
    const Complex value = f(s + t * y, x + t * z, t);
    sup = std::max(sup, std::abs(value));
    out.value += rule.weights[k] * value;
  }
  // Decay check at the cut: a Schwartz-class f is negligible at |t| = T.
  const double tail =
      std::max(std::abs(f(s + T * y, x + T * z, T)), std::abs(f(s - T * y, x - T * z, -T)));
  if (tail > 1e-14 * std::max(sup, 1.0)) {
    out.warnings.push_back(
        "integrand not negligible at the truncation boundary; increase T or check decay");
  }
  return out;
}

}  // namespace charvar
