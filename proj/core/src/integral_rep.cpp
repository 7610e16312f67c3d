// SPDX-FileCopyrightText: 2026 charvar contributors
// SPDX-License-Identifier: Apache-2.0

#include "charvar/integral_rep.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <utility>

namespace charvar {

namespace {

constexpr Complex kI{0.0, 1.0};

}  // namespace

// ---------------------------------------------------------------------------
// Profiles.

Complex TrigPoly::eval(double t) const {
  Complex acc = c0;
  for (std::size_t j = 0; j < cos_coeffs.size(); ++j) {
    acc += cos_coeffs[j] * std::cos((j + 1) * t);
  }
  for (std::size_t j = 0; j < sin_coeffs.size(); ++j) {
    acc += sin_coeffs[j] * std::sin((j + 1) * t);
  }
  return acc;
}

Complex Profile::evaluate(Complex w, std::span<const double> path_point) const {
  switch (kind) {
    case Kind::poly_in_w: {
      Complex acc(0, 0);
      for (auto it = w_coeffs.rbegin(); it != w_coeffs.rend(); ++it) acc = acc * w + *it;
      return acc;
    }
    case Kind::fourier_poly: {
      if (path_point.empty()) {
        throw std::invalid_argument("Profile: fourier_poly needs a path coordinate");
      }
      const double t = path_point[0];
      Complex acc(0, 0);
      Complex wk(1, 0);
      for (const auto& g : fourier) {
        acc += g.eval(t) * wk;
        wk *= w;
      }
      return acc;
    }
    case Kind::series:
      if (!series) throw std::invalid_argument("Profile: series evaluator missing");
      return series(w, path_point);
  }
  throw std::logic_error("Profile: unknown kind");
}

Profile Profile::poly(std::vector<Complex> coeffs) {
  Profile p;
  p.kind = Kind::poly_in_w;
  p.max_degree = coeffs.empty() ? 0 : static_cast<int>(coeffs.size()) - 1;
  p.w_coeffs = std::move(coeffs);
  return p;
}

Profile Profile::monomial(int m) {
  if (m < 0) throw std::invalid_argument("Profile::monomial: negative degree");
  std::vector<Complex> coeffs(m + 1, Complex(0, 0));
  coeffs[m] = Complex(1, 0);
  return poly(std::move(coeffs));
}

Profile Profile::fourier_profile(std::vector<TrigPoly> per_degree) {
  Profile p;
  p.kind = Kind::fourier_poly;
  p.max_degree = per_degree.empty() ? 0 : static_cast<int>(per_degree.size()) - 1;
  p.fourier = std::move(per_degree);
  return p;
}

Profile Profile::general(std::function<Complex(Complex, std::span<const double>)> f,
                         int max_degree) {
  Profile p;
  p.kind = Kind::series;
  p.series = std::move(f);
  p.max_degree = max_degree;
  return p;
}

// ---------------------------------------------------------------------------
// The representation quadrature.

Complex represent(const CurveChart& chart, const Profile& profile, const QuadratureRule& rule,
                  std::span<const Complex> x) {
  if (static_cast<int>(x.size()) != chart.ambient_vars) {
    throw std::invalid_argument("represent: evaluation point size != chart ambient variables");
  }
  if (rule.dimension() != chart.param_count) {
    throw std::invalid_argument("represent: quadrature dimension != chart parameter count");
  }
  Complex acc(0, 0);
  for (std::size_t k = 0; k < rule.weights.size(); ++k) {
    const auto& node = rule.nodes[k];
    const auto params = chart.path_param(std::span<const double>(node));
    if (!chart.in_domain(std::span<const Complex>(params))) {
      throw std::domain_error("represent: quadrature node maps outside the chart domain");
    }
    const auto point = canonicalize_point(chart.map(std::span<const Complex>(params)));
    const Complex w = dot(std::span<const Complex>(point), x);
    acc += rule.weights[k] * profile.evaluate(w, std::span<const double>(node));
  }
  return acc;
}

std::function<Complex(std::span<const double>)> representation(CurveChart chart, Profile profile,
                                                               QuadratureRule rule) {
  return [chart = std::move(chart), profile = std::move(profile),
          rule = std::move(rule)](std::span<const double> x) {
    std::vector<Complex> xc(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) xc[i] = Complex(x[i], 0.0);
    return represent(chart, profile, rule, std::span<const Complex>(xc));
  };
}

// ---------------------------------------------------------------------------
// The classical closed-contour formulas.

Complex whittaker_laplace(const std::function<Complex(Complex, double)>& f, double x, double y,
                          double z, int nodes) {
  const auto rule = periodic_trapezoid(nodes);
  Complex acc(0, 0);
  for (std::size_t k = 0; k < rule.weights.size(); ++k) {
    const double u = rule.nodes[k][0];
    const Complex w = Complex(z, 0) + kI * (x * std::cos(u) + y * std::sin(u));
    acc += rule.weights[k] * f(w, u);
  }
  return acc;
}

Complex whittaker_wave(const std::function<Complex(Complex, double, double)>& f, double x,
                       double y, double z, double t, int nodes) {
  const auto rule = periodic_trapezoid(nodes);
  Complex acc(0, 0);
  for (std::size_t a = 0; a < rule.weights.size(); ++a) {
    const double u = rule.nodes[a][0];
    const double su = std::sin(u);
    const double cu = std::cos(u);
    Complex inner(0, 0);
    for (std::size_t b = 0; b < rule.weights.size(); ++b) {
      const double v = rule.nodes[b][0];
      const Complex w(t + x * su * std::cos(v) + y * su * std::sin(v) + z * cu, 0.0);
      inner += rule.weights[b] * f(w, u, v);
    }
    acc += rule.weights[a] * inner;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Exact harmonic Fourier basis.

HomogeneousPoly<GaussianRational> harmonic_fourier_basis(int n, int m, Parity parity) {
  if (n < 0 || n > 20) throw std::invalid_argument("harmonic_fourier_basis: need 0 <= n <= 20");
  if (parity == Parity::cos) {
    if (m < 0 || m > n) throw std::invalid_argument("harmonic_fourier_basis: need 0 <= m <= n");
  } else {
    if (m < 1 || m > n) throw std::invalid_argument("harmonic_fourier_basis: need 1 <= m <= n");
  }
  // Write the linear form as Z + e (iX + Y)/2 + e^{-1} (iX - Y)/2 with
  // e = exp(iu); the n-th power is a Laurent polynomial sum_k c_k(X,Y,Z) e^k
  // and the angular integrals pick out c_{+-m}:
  //   g_m = c_m + c_{-m} (m >= 1),  g_0 = 2 c_0,  h_m = i (c_m - c_{-m}).
  const GaussianRational half(BigRational(1) / 2);
  const GaussianRational ihalf(BigRational(0), BigRational(1) / 2);
  const std::vector<GaussianRational> plus = {ihalf, half, GaussianRational(0)};
  const std::vector<GaussianRational> minus = {ihalf, -half, GaussianRational(0)};

  std::vector<HomogeneousPoly<GaussianRational>> c(2 * n + 1,
                                                   HomogeneousPoly<GaussianRational>(3, n));
  for (int a = 0; a <= n; ++a) {
    const auto pa = power_of_linear_form(std::span<const GaussianRational>(plus), a);
    for (int b = 0; a + b <= n; ++b) {
      const int zc = n - a - b;
      const auto pb = power_of_linear_form(std::span<const GaussianRational>(minus), b);
      HomogeneousPoly<GaussianRational> zpow(3, zc);
      zpow.set_coeff(Monomial{0, 0, zc}, GaussianRational(1));
      const auto coeff = GaussianRational(
          static_cast<long long>(detail::multinomial(Monomial{a, b, zc})));
      c[a - b + n] += coeff * (pa * pb * zpow);
    }
  }
  if (parity == Parity::cos) {
    if (m == 0) return GaussianRational(2) * c[n];
    return c[m + n] + c[-m + n];
  }
  return GaussianRational::i() * (c[m + n] - c[-m + n]);
}

// ---------------------------------------------------------------------------
// PDE residuals.

namespace {

/// Termwise |c| * prod |p_i|^alpha_i, the natural magnitude of an evaluation.
double abs_evaluation(const HomogeneousPoly<Complex>& w, const std::vector<Complex>& p) {
  double acc = 0.0;
  for (const auto& [mono, coeff] : w.terms()) {
    double term = std::abs(coeff);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (mono[i] > 0) term *= std::pow(std::abs(p[i]), mono[i]);
    }
    acc += term;
  }
  return acc;
}

/// Central-difference weights for the k-th derivative on offsets -s..s,
/// before division by h^k: solve sum_j w_j j^t = k! [t == k], t = 0..2s.
std::vector<double> central_stencil(int k, int order) {
  const int s = (k + 1) / 2 + std::max(order, 2) / 2;
  const int q = 2 * s + 1;
  Eigen::MatrixXd vand(q, q);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(q);
  for (int t = 0; t < q; ++t) {
    for (int j = 0; j < q; ++j) vand(t, j) = std::pow(static_cast<double>(j - s), t);
  }
  double kfact = 1.0;
  for (int i = 2; i <= k; ++i) kfact *= i;
  rhs(k) = kfact;
  const Eigen::VectorXd w = vand.partialPivLu().solve(rhs);
  return std::vector<double>(w.data(), w.data() + q);
}

struct AxisStencil {
  int axis = 0;
  int k = 0;
  std::vector<double> weights;  ///< offsets -s..s, pre-division by h^k
};

/// D^alpha V(p) by the tensor product of per-axis stencils; accumulates
/// sum |weight * V| into abs_acc for the scale.
Complex apply_composed_stencil(const std::function<Complex(std::span<const double>)>& v,
                               const std::vector<double>& p,
                               const std::vector<AxisStencil>& stencils, double h,
                               double& abs_acc) {
  const int dims = static_cast<int>(stencils.size());
  std::vector<int> index(dims, 0);
  std::vector<double> shifted = p;
  Complex acc(0, 0);
  int total_k = 0;
  for (const auto& st : stencils) total_k += st.k;
  const double hk = std::pow(h, total_k);
  while (true) {
    double weight = 1.0;
    for (int i = 0; i < dims; ++i) {
      const auto& st = stencils[i];
      const int s = (static_cast<int>(st.weights.size()) - 1) / 2;
      weight *= st.weights[index[i]];
      shifted[st.axis] = p[st.axis] + h * (index[i] - s);
    }
    if (weight != 0.0) {
      const Complex value = v(std::span<const double>(shifted));
      acc += weight * value;
      abs_acc += std::abs(weight * value) / hk;
    }
    int carry = 0;
    while (carry < dims) {
      if (++index[carry] < static_cast<int>(stencils[carry].weights.size())) break;
      index[carry] = 0;
      ++carry;
    }
    if (carry == dims) break;
    for (int i = 0; i <= std::min(carry, dims - 1); ++i) {
      shifted[stencils[i].axis] = p[stencils[i].axis];
    }
  }
  return acc / hk;
}

/// One full F(d/dx)V evaluation at p for a fixed step h.
Complex fd_apply_symbol(const HomogeneousPoly<Complex>& f,
                        const std::function<Complex(std::span<const double>)>& v,
                        const std::vector<double>& p,
                        const std::vector<std::vector<AxisStencil>>& term_stencils, double h,
                        double& abs_acc) {
  Complex acc(0, 0);
  std::size_t term = 0;
  for (const auto& [mono, coeff] : f.terms()) {
    double term_abs = 0.0;
    const Complex d = apply_composed_stencil(v, p, term_stencils[term], h, term_abs);
    acc += coeff * d;
    abs_acc += std::abs(coeff) * term_abs;
    ++term;
  }
  return acc;
}

}  // namespace

ResidualReport pde_residual_exact(const HomogeneousPoly<Complex>& F,
                                  const HomogeneousPoly<Complex>& V,
                                  const std::vector<std::vector<double>>& points) {
  if (F.nvars() != V.nvars()) {
    throw std::invalid_argument("pde_residual_exact: variable counts differ");
  }
  ResidualReport report;
  report.symbol = F;
  report.points = points;
  report.method = "exact_symbolic";
  const auto w = apply_diff_operator(F, V);
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != F.nvars()) {
      throw std::invalid_argument("pde_residual_exact: point size != nvars");
    }
    std::vector<Complex> pc(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) pc[i] = Complex(p[i], 0.0);
    const double scale = std::max(1.0, abs_evaluation(w, pc));
    const double value = std::abs(w.evaluate(std::span<const Complex>(pc)));
    report.max_abs_residual = std::max(report.max_abs_residual, value / scale);
    report.scale = std::max(report.scale, scale);
  }
  return report;
}

ResidualReport pde_residual(const HomogeneousPoly<Complex>& F,
                            const std::function<Complex(std::span<const double>)>& V,
                            const std::vector<std::vector<double>>& points, double h, int order) {
  if (F.is_zero()) throw std::invalid_argument("pde_residual: zero symbol");
  if (h <= 0.0) throw std::invalid_argument("pde_residual: step must be positive");
  ResidualReport report;
  report.symbol = F;
  report.points = points;

  // Symbols of total order above 4 use a coarser step plus one Richardson
  // extrapolation step (4th-order base) to keep cancellation in check.
  const bool richardson = F.degree() > 4;
  const double step = richardson ? 1e-2 : h;
  {
    std::string desc = "finite_difference(h=" + std::to_string(step) +
                       ", order=" + std::to_string(order) + ")";
    if (richardson) desc += "+richardson";
    report.method = std::move(desc);
  }

  std::vector<std::vector<AxisStencil>> term_stencils;
  for (const auto& [mono, coeff] : F.terms()) {
    std::vector<AxisStencil> per_axis;
    for (int axis = 0; axis < F.nvars(); ++axis) {
      if (mono[axis] > 0) {
        per_axis.push_back({axis, mono[axis], central_stencil(mono[axis], order)});
      }
    }
    term_stencils.push_back(std::move(per_axis));
  }

  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != F.nvars()) {
      throw std::invalid_argument("pde_residual: point size != nvars");
    }
    double abs_acc = 0.0;
    Complex value = fd_apply_symbol(F, V, p, term_stencils, step, abs_acc);
    if (richardson) {
      double abs_half = 0.0;
      const Complex half = fd_apply_symbol(F, V, p, term_stencils, step / 2, abs_half);
      value = (16.0 * half - value) / 15.0;
      abs_acc = abs_half;
    }
    const double scale = std::max(1.0, abs_acc);
    report.max_abs_residual = std::max(report.max_abs_residual, std::abs(value) / scale);
    report.scale = std::max(report.scale, scale);
  }
  return report;
}

}  // namespace charvar
