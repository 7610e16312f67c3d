// SPDX-FileCopyrightText: 2026 charvar contributors
// SPDX-License-Identifier: Apache-2.0
//
// The Dixon elliptic pair (s, c): the solution of s' = c^2, c' = -s^2 with
// s(0) = 0, c(0) = 1, which satisfies s^3 + c^3 = 1 identically and
// parametrizes the Fermat cubic.  Series coefficients are exact rationals
// from the Taylor recurrence
//     (k+1) s_{k+1} = [u^k](c^2),     (k+1) c_{k+1} = -[u^k](s^2),
// which is authoritative for coefficient values.  A fixed-step RK4
// integration of the same ODE serves as the independent numerical oracle.

#pragma once

#include <vector>

#include "charvar/scalar.hpp"

namespace charvar {

struct DixonSeries {
  int order = 0;
  /// Taylor coefficients 0..order of s and c; s_k = 0 unless k = 1 mod 3,
  /// c_k = 0 unless k = 0 mod 3.
  std::vector<BigRational> s;
  std::vector<BigRational> c;
};

/// Exact series up to and including u^order.
DixonSeries dixon_series(int order);

struct DixonValue {
  Complex s{0.0, 0.0};
  Complex c{0.0, 0.0};
  /// |s^3 + c^3 - 1| at the evaluation point.
  double cubic_residual = 0.0;
};

/// Truncated-series evaluation, valid on |u| <= 1 (the validated radius;
/// the true singularity sits near |u| = 1.77).  Throws std::domain_error
/// beyond the radius, advising dixon_ode_oracle for real arguments.
DixonValue dixon_eval(Complex u, int order = 64);

/// Classical RK4 on s' = c^2, c' = -s^2 from 0 to u with fixed step size
/// (final partial step shortened); real arguments only.
DixonValue dixon_ode_oracle(double u, double step = 1e-3);

}  // namespace charvar
