// SPDX-FileCopyrightText: 2026 charvar contributors
// SPDX-License-Identifier: Apache-2.0
//
// The space of oriented lines in R^3 as the tangent bundle of the 2-sphere:
// stereographic chart coordinates, the real-section correspondence with
// points of R^3, the antiholomorphic involution tau, and the John transform
// with its ultrahyperbolic constraint.

#pragma once

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "charvar/scalar.hpp"

namespace charvar {

/// The line { v + t u : t real } with unit direction u and moment v
/// orthogonal to u — a point of T S^2.
struct OrientedLine {
  std::array<double, 3> u{};
  std::array<double, 3> v{};
};

/// (u, v) -> (u, v - (v,u) u): project the foot point onto the orthogonal
/// complement of the direction.  Throws unless |u| = 1 to 1e-9.
OrientedLine line_to_ts2(const std::array<double, 3>& u, const std::array<double, 3>& v);

/// Stereographic chart away from the north pole (u3 != 1):
///   xi  = (u1 + i u2) / (1 - u3)
///   eta = (v1 + i v2) / (1 - u3) + (u1 + i u2) v3 / (1 - u3)^2.
/// Throws on the pole.
std::pair<Complex, Complex> chart_coordinates(const OrientedLine& line);

/// A holomorphic section eta = a + b xi + c xi^2 of the lines through a
/// common point; real sections satisfy a = -conj(c) with b real.
struct RealSection {
  Complex a{0, 0};
  Complex b{0, 0};
  Complex c{0, 0};

  Complex eval(Complex xi) const { return a + b * xi + c * xi * xi; }
  bool is_real(double tol = 1e-12) const;
};

/// The section of the point p = (x, y, z):
/// eta = ((x + iy) + 2 z xi - (x - iy) xi^2) / 2, i.e. a = (x+iy)/2, b = z,
/// c = -(x-iy)/2; satisfies the reality condition by construction.
RealSection real_section_of_point(const std::array<double, 3>& p);

/// Inverse of real_section_of_point on real sections:
/// p = (2 Re a, 2 Im a, Re b).
std::array<double, 3> point_of_real_section(const RealSection& section);

/// The orientation-reversing involution (xi, eta) ->
/// (-1/conj(xi), -conj(eta)/conj(xi)^2), i.e. (u, v) -> (-u, v) in line
/// terms.  Throws at xi = 0 (outside the chart overlap).
std::pair<Complex, Complex> tau(Complex xi, Complex eta);

struct JohnResult {
  Complex value{0, 0};
  std::vector<std::string> warnings;
};

/// phi(s, x, y, z) = integral over t of f(s + t y, x + t z, t), the X-ray
/// pairing of f with the line parametrized by (s, x, y, z).  Truncated to
/// [-T, T] with Gauss-Legendre quadrature; insufficient decay at the cut is
/// reported as a warning.
JohnResult john_transform(const std::function<Complex(double, double, double)>& f, double s,
                          double x, double y, double z, double T = 8.0, int nodes = 200);

}  // namespace charvar
