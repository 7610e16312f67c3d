// SPDX-FileCopyrightText: 2026 charvar contributors
// SPDX-License-Identifier: Apache-2.0

#include "charvar/dixon.hpp"

#include <cmath>
#include <stdexcept>

namespace charvar {

DixonSeries dixon_series(int order) {
  if (order < 0) throw std::invalid_argument("dixon_series: negative order");
  DixonSeries out;
  out.order = order;
  out.s.assign(order + 1, BigRational(0));
  out.c.assign(order + 1, BigRational(0));
  if (order >= 0) out.c[0] = 1;
  if (order >= 1) out.s[1] = 1;
  for (int k = 1; k < order; ++k) {
    // [u^k] of c^2 and s^2 from the coefficients already known (degree <= k).
    BigRational c2(0), s2(0);
    for (int i = 0; i <= k; ++i) {
      if (out.c[i] != 0 && out.c[k - i] != 0) c2 += out.c[i] * out.c[k - i];
      if (out.s[i] != 0 && out.s[k - i] != 0) s2 += out.s[i] * out.s[k - i];
    }
    out.s[k + 1] = c2 / (k + 1);
    out.c[k + 1] = -s2 / (k + 1);
  }
  return out;
}

DixonValue dixon_eval(Complex u, int order) {
  if (order < 1) throw std::invalid_argument("dixon_eval: order must be >= 1");
  if (std::abs(u) > 1.0) {
    throw std::domain_error(
        "dixon_eval: |u| > 1 is outside the validated series radius; "
        "use dixon_ode_oracle for real arguments");
  }
  static thread_local DixonSeries cache;  // grows monotonically
  if (cache.order < order) cache = dixon_series(order);
  // Horner evaluation of both truncations at the requested order.
  Complex s(0.0, 0.0), c(0.0, 0.0);
  for (int k = order; k >= 0; --k) {
    s = s * u + Complex(cache.s[k].convert_to<double>(), 0.0);
    c = c * u + Complex(cache.c[k].convert_to<double>(), 0.0);
  }
  DixonValue out;
  out.s = s;
  out.c = c;
  out.cubic_residual = std::abs(s * s * s + c * c * c - 1.0);
  return out;
}

DixonValue dixon_ode_oracle(double u, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("dixon_ode_oracle: step must be positive");
  double s = 0.0;
  double c = 1.0;
  double t = 0.0;
  const double dir = u >= 0.0 ? 1.0 : -1.0;
  auto fs = [](double, double cv) { return cv * cv; };
  auto fc = [](double sv, double) { return -sv * sv; };
  while (std::abs(u - t) > 1e-300) {
    const double h = dir * std::min(step, std::abs(u - t));
    const double k1s = fs(s, c), k1c = fc(s, c);
    const double k2s = fs(s + 0.5 * h * k1s, c + 0.5 * h * k1c);
    const double k2c = fc(s + 0.5 * h * k1s, c + 0.5 * h * k1c);
    const double k3s = fs(s + 0.5 * h * k2s, c + 0.5 * h * k2c);
    const double k3c = fc(s + 0.5 * h * k2s, c + 0.5 * h * k2c);
    const double k4s = fs(s + h * k3s, c + h * k3c);
    const double k4c = fc(s + h * k3s, c + h * k3c);
    s += h / 6.0 * (k1s + 2.0 * k2s + 2.0 * k3s + k4s);
    c += h / 6.0 * (k1c + 2.0 * k2c + 2.0 * k3c + k4c);
    t += h;
    if (std::abs(h) < step * 0.5) break;  // final partial step done
  }
  DixonValue out;
  out.s = Complex(s, 0.0);
  out.c = Complex(c, 0.0);
  out.cubic_residual = std::abs(s * s * s + c * c * c - 1.0);
  return out;
}

}  // namespace charvar
