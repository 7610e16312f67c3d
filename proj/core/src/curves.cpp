// SPDX-FileCopyrightText: 2026 charvar contributors
// SPDX-License-Identifier: Apache-2.0

#include "charvar/curves.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "charvar/dixon.hpp"

namespace charvar {

namespace {

constexpr Complex kI{0.0, 1.0};

double sup_abs(std::span<const Complex> v) {
  double best = 0.0;
  for (const auto& c : v) best = std::max(best, std::abs(c));
  return best;
}

// ---------------------------------------------------------------------------
// Dense bivariate polynomials sum c[i][j] t^i y^j, the affine (z = 1) form of
// plane projective curves.  Used by the resultant pipeline and branch
// tracking; deliberately internal to this translation unit.

struct BiPoly {
  int dt = 0;  // degree bound in t
  int dy = 0;  // degree bound in y
  std::vector<std::vector<Complex>> c;  // c[i][j], i <= dt, j <= dy

  static BiPoly zero(int dt, int dy) {
    BiPoly p;
    p.dt = dt;
    p.dy = dy;
    p.c.assign(dt + 1, std::vector<Complex>(dy + 1, Complex(0, 0)));
    return p;
  }

  Complex eval(Complex t, Complex y) const {
    Complex acc(0, 0);
    for (int i = dt; i >= 0; --i) {
      Complex row(0, 0);
      for (int j = dy; j >= 0; --j) row = row * y + c[i][j];
      acc = acc * t + row;
    }
    return acc;
  }

  /// Coefficients in y of p(t, .), ascending, length dy + 1.
  std::vector<Complex> slice_at(Complex t) const {
    std::vector<Complex> out(dy + 1, Complex(0, 0));
    for (int j = 0; j <= dy; ++j) {
      Complex acc(0, 0);
      for (int i = dt; i >= 0; --i) acc = acc * t + c[i][j];
      out[j] = acc;
    }
    return out;
  }

  BiPoly d_dy() const {
    BiPoly out = zero(dt, std::max(0, dy - 1));
    for (int i = 0; i <= dt; ++i) {
      for (int j = 1; j <= dy; ++j) out.c[i][j - 1] = static_cast<double>(j) * c[i][j];
    }
    return out;
  }

  BiPoly d_dt() const {
    BiPoly out = zero(std::max(0, dt - 1), dy);
    for (int i = 1; i <= dt; ++i) {
      for (int j = 0; j <= dy; ++j) out.c[i - 1][j] = static_cast<double>(i) * c[i][j];
    }
    return out;
  }

  double coeff_norm() const {
    double s = 0.0;
    for (const auto& row : c) {
      for (const auto& v : row) s += std::abs(v);
    }
    return s;
  }
};

/// F(t, y, 1) for a plane projective curve F, trimmed to the actual degrees
/// in t and y (the formal bounds matter for resultant sizing).
BiPoly dehomogenize(const HomogeneousPoly<Complex>& f) {
  if (f.nvars() != 3) throw std::invalid_argument("dehomogenize: need 3 variables");
  BiPoly out = BiPoly::zero(f.degree(), f.degree());
  int dt = 0;
  int dy = 0;
  for (const auto& [mono, coeff] : f.terms()) {
    out.c[mono[0]][mono[1]] += coeff;
    dt = std::max(dt, mono[0]);
    dy = std::max(dy, mono[1]);
  }
  out.dt = dt;
  out.dy = dy;
  out.c.resize(dt + 1);
  for (auto& row : out.c) row.resize(dy + 1);
  return out;
}

// ---------------------------------------------------------------------------
// Univariate helpers.

Complex eval_poly(std::span<const Complex> coeffs, Complex z) {
  Complex acc(0, 0);
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) acc = acc * z + coeffs[k];
  return acc;
}

double coeff_norm_1(std::span<const Complex> coeffs) {
  double s = 0.0;
  for (const auto& v : coeffs) s += std::abs(v);
  return s;
}

/// Determinant of the Sylvester matrix of p (formal degree m) and q (formal
/// degree n) plus its Hadamard bound, used for the common-component test.
struct DetWithBound {
  Complex det;
  double bound;
};

DetWithBound sylvester_det(std::span<const Complex> p, int m, std::span<const Complex> q, int n) {
  const int size = m + n;
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(size, size);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= m; ++j) s(i, i + j) = p[m - j];
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= n; ++j) s(n + i, i + j) = q[n - j];
  }
  DetWithBound out;
  out.det = Eigen::PartialPivLU<Eigen::MatrixXcd>(s).determinant();
  double bound = 1.0;
  for (int i = 0; i < size; ++i) bound *= s.row(i).norm();
  out.bound = bound;
  return out;
}

/// Res_y(a, b) as a polynomial in t (ascending coefficients), by evaluation
/// at roots of unity and inverse DFT.  Throws if the resultant is zero to
/// working precision, which signals a common component.
std::vector<Complex> resultant_in_y(const BiPoly& a, const BiPoly& b) {
  const int m = a.dy;
  const int n = b.dy;
  if (m < 1 || n < 1) throw std::invalid_argument("resultant_in_y: need positive y-degrees");
  const int bound = a.dt * n + b.dt * m;
  const int count = bound + 1;
  std::vector<Complex> values(count);
  bool all_tiny = true;
  for (int k = 0; k < count; ++k) {
    const Complex node = std::exp(kI * (2.0 * M_PI * k / count));
    const auto pa = a.slice_at(node);
    const auto pb = b.slice_at(node);
    const auto det = sylvester_det(pa, m, pb, n);
    values[k] = det.det;
    if (std::abs(det.det) > 1e-10 * std::max(det.bound, 1e-300)) all_tiny = false;
  }
  if (all_tiny) {
    throw std::runtime_error(
        "resultant_in_y: resultant vanishes identically; the curves appear to share a component");
  }
  std::vector<Complex> coeffs(count);
  for (int j = 0; j < count; ++j) {
    Complex acc(0, 0);
    for (int k = 0; k < count; ++k) {
      acc += values[k] * std::exp(-kI * (2.0 * M_PI * j * k / count));
    }
    coeffs[j] = acc / static_cast<double>(count);
  }
  return coeffs;
}

std::mt19937_64 seeded_engine(unsigned long long seed) { return std::mt19937_64(seed); }

std::vector<std::vector<Complex>> random_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  }
  Eigen::MatrixXcd q = Eigen::HouseholderQR<Eigen::MatrixXcd>(g).householderQ();
  std::vector<std::vector<Complex>> out(n, std::vector<Complex>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out[i][j] = q(i, j);
  }
  return out;
}

std::vector<Complex> apply_matrix(const std::vector<std::vector<Complex>>& a,
                                  std::span<const Complex> x) {
  std::vector<Complex> out(a.size(), Complex(0, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) out[i] += a[i][j] * x[j];
  }
  return out;
}

}  // namespace

double chart_residual(const CurveChart& chart, std::span<const Complex> params) {
  const auto coords = chart.map(params);
  const double sup = sup_abs(coords);
  if (sup == 0.0) return std::numeric_limits<double>::infinity();
  std::vector<Complex> x(coords.begin(), coords.end());
  return std::abs(chart.symbol.evaluate(x)) / std::pow(sup, chart.symbol.degree());
}

// ---------------------------------------------------------------------------
// Preset charts.

namespace {

HomogeneousPoly<Complex> float_symbol(const std::string& name, int nvars) {
  return to_float(preset_symbol(name, nvars));
}

CurveChart make_laplace_chart() {
  CurveChart chart;
  chart.name = "laplace_quadric";
  chart.ambient_vars = 3;
  chart.param_count = 1;
  chart.domain_description = "angle u on the unit circle; the map is entire in u";
  chart.in_domain = [](std::span<const Complex>) { return true; };
  chart.map = [](std::span<const Complex> t) {
    const Complex u = t[0];
    const Complex e2 = std::exp(2.0 * kI * u);
    return std::vector<Complex>{kI * (e2 + 1.0), e2 - 1.0, 2.0 * std::exp(kI * u)};
  };
  chart.path_param = [](std::span<const double> s) {
    return std::vector<Complex>{Complex(s[0], 0.0)};
  };
  chart.default_rule = [](int n) { return periodic_trapezoid(n); };
  chart.sample = [](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);
    return std::vector<Complex>{Complex(angle(rng), 0.0)};
  };
  chart.symbol = float_symbol("laplace_quadric", 3);
  return chart;
}

CurveChart make_wave_chart() {
  CurveChart chart;
  chart.name = "wave_quadric";
  chart.ambient_vars = 4;
  chart.param_count = 2;
  chart.domain_description = "(xi, xi') anywhere in C^2; the torus path uses unit circles";
  chart.in_domain = [](std::span<const Complex>) { return true; };
  chart.map = [](std::span<const Complex> t) {
    const Complex xi = t[0];
    const Complex xp = t[1];
    return std::vector<Complex>{(xi * xi - 1.0) * (1.0 + xp * xp),
                                -kI * (xi * xi - 1.0) * (xp * xp - 1.0),
                                2.0 * kI * (1.0 + xi * xi) * xp, 4.0 * kI * xi * xp};
  };
  chart.path_param = [](std::span<const double> s) {
    return std::vector<Complex>{std::exp(kI * s[0]), std::exp(kI * s[1])};
  };
  chart.default_rule = [](int n) {
    return product_rule(periodic_trapezoid(n), periodic_trapezoid(n));
  };
  chart.sample = [](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);
    return std::vector<Complex>{std::exp(kI * angle(rng)), std::exp(kI * angle(rng))};
  };
  chart.symbol = float_symbol("wave_quadric", 4);
  return chart;
}

CurveChart make_fermat_chart() {
  CurveChart chart;
  chart.name = "fermat_cubic";
  chart.ambient_vars = 3;
  chart.param_count = 1;
  chart.domain_description = "|u| <= 1, the validated radius of the Dixon series";
  chart.in_domain = [](std::span<const Complex> t) { return std::abs(t[0]) <= 1.0 + 1e-9; };
  chart.map = [](std::span<const Complex> t) {
    const DixonValue v = dixon_eval(t[0], 64);
    return std::vector<Complex>{v.c, v.s, Complex(-1.0, 0.0)};
  };
  // The integration path is the real segment [-0.9, 0.9].  A closed circle
  // in u would collapse every analytic-profile integral to its base point by
  // the mean value property, so a segment path is the useful choice here.
  chart.path_param = [](std::span<const double> s) {
    return std::vector<Complex>{Complex(s[0], 0.0)};
  };
  chart.default_rule = [](int n) { return gauss_legendre(n, -0.9, 0.9); };
  chart.sample = [](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-0.95, 0.95);
    return std::vector<Complex>{Complex(u(rng), 0.0)};
  };
  chart.symbol = float_symbol("fermat_cubic", 3);
  return chart;
}

}  // namespace

CurveChart preset_chart(const std::string& name) {
  if (name == "laplace_quadric" || name == "laplace") return make_laplace_chart();
  if (name == "wave_quadric" || name == "wave") return make_wave_chart();
  if (name == "fermat_cubic" || name == "fermat") return make_fermat_chart();
  throw std::invalid_argument("preset_chart: unknown preset '" + name +
                              "' (expected laplace_quadric, wave_quadric or fermat_cubic)");
}

CurveChart product_hypersurface_chart(int nvars) {
  if (nvars < 3) {
    throw std::invalid_argument("product_hypersurface_chart: need at least 3 variables");
  }
  const int k = nvars - 2;
  CurveChart chart;
  chart.name = "product_hypersurface";
  chart.ambient_vars = nvars;
  chart.param_count = k;
  chart.domain_description = "(t_1, ..., t_" + std::to_string(k) + ") with every t_i nonzero";
  chart.in_domain = [](std::span<const Complex> t) {
    for (const auto& v : t) {
      if (std::abs(v) < 1e-8) return false;
    }
    return true;
  };
  chart.map = [nvars, k](std::span<const Complex> t) {
    std::vector<Complex> coords(nvars);
    Complex prod(1.0, 0.0);
    for (int i = 0; i < k; ++i) {
      coords[i] = t[i];
      prod *= t[i];
    }
    coords[nvars - 2] = 1.0 / prod;
    coords[nvars - 1] = Complex(1.0, 0.0);
    return coords;
  };
  chart.path_param = [k](std::span<const double> s) {
    std::vector<Complex> out(k);
    for (int i = 0; i < k; ++i) out[i] = std::exp(kI * s[i]);
    return out;
  };
  chart.default_rule = [k](int n) {
    QuadratureRule rule = periodic_trapezoid(n);
    for (int i = 1; i < k; ++i) rule = product_rule(rule, periodic_trapezoid(n));
    return rule;
  };
  chart.sample = [k](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);
    std::vector<Complex> out(k);
    for (int i = 0; i < k; ++i) out[i] = std::exp(kI * angle(rng));
    return out;
  };
  chart.symbol = float_symbol("product_hypersurface", nvars);
  return chart;
}

HomogeneousPoly<GaussianRational> preset_symbol(const std::string& name, int nvars) {
  if (name == "laplace_quadric" || name == "laplace") {
    HomogeneousPoly<GaussianRational> f(3, 2);
    f.set_coeff({2, 0, 0}, GaussianRational(1));
    f.set_coeff({0, 2, 0}, GaussianRational(1));
    f.set_coeff({0, 0, 2}, GaussianRational(1));
    return f;
  }
  if (name == "wave_quadric" || name == "wave") {
    HomogeneousPoly<GaussianRational> f(4, 2);
    f.set_coeff({2, 0, 0, 0}, GaussianRational(1));
    f.set_coeff({0, 2, 0, 0}, GaussianRational(1));
    f.set_coeff({0, 0, 2, 0}, GaussianRational(1));
    f.set_coeff({0, 0, 0, 2}, GaussianRational(-1));
    return f;
  }
  if (name == "fermat_cubic" || name == "fermat") {
    HomogeneousPoly<GaussianRational> f(3, 3);
    f.set_coeff({3, 0, 0}, GaussianRational(1));
    f.set_coeff({0, 3, 0}, GaussianRational(1));
    f.set_coeff({0, 0, 3}, GaussianRational(1));
    return f;
  }
  if (name == "product_hypersurface") {
    if (nvars < 3) {
      throw std::invalid_argument("preset_symbol: product_hypersurface needs nvars >= 3");
    }
    HomogeneousPoly<GaussianRational> f(nvars, nvars - 1);
    Monomial ones(nvars, 1);
    ones[nvars - 1] = 0;
    f.set_coeff(ones, GaussianRational(1));
    Monomial last(nvars, 0);
    last[nvars - 1] = nvars - 1;
    f.set_coeff(last, GaussianRational(-1));
    return f;
  }
  throw std::invalid_argument("preset_symbol: unknown preset '" + name + "'");
}

// ---------------------------------------------------------------------------
// Durand-Kerner root finding.

RootSet roots_univariate(std::span<const Complex> coeffs) {
  RootSet out;
  std::vector<Complex> a(coeffs.begin(), coeffs.end());
  double maxc = 0.0;
  for (const auto& v : a) maxc = std::max(maxc, std::abs(v));
  if (maxc == 0.0) throw std::invalid_argument("roots_univariate: zero polynomial");
  while (a.size() > 1 && std::abs(a.back()) <= 1e-14 * maxc) {
    a.pop_back();
    if (out.warnings.empty()) {
      out.warnings.push_back("leading coefficient is negligible; degree reduced");
    }
  }
  const int n = static_cast<int>(a.size()) - 1;
  if (n == 0) {
    out.warnings.push_back("constant polynomial has no roots");
    return out;
  }
  if (n == 1) {
    out.roots.push_back(-a[0] / a[1]);
    return out;
  }
  // Monic normalization and Fujiwara-style initial radius.
  const Complex lead = a.back();
  for (auto& v : a) v /= lead;
  double radius = 0.0;
  for (int k = 0; k < n; ++k) {
    radius = std::max(radius, std::pow(std::abs(a[k]), 1.0 / (n - k)));
  }
  radius = std::max(radius, 0.5);

  std::vector<Complex> z(n);
  const double norm1 = coeff_norm_1(a);
  for (int restart = 0; restart < 3; ++restart) {
    for (int j = 0; j < n; ++j) {
      z[j] = radius * std::exp(kI * (2.0 * M_PI * j / n + 0.4 + 0.9 * restart));
    }
    bool finite = true;
    for (int iter = 0; iter < 500; ++iter) {
      double max_step = 0.0;
      double max_z = 1.0;
      for (int j = 0; j < n && finite; ++j) {
        Complex denom(1.0, 0.0);
        for (int k = 0; k < n; ++k) {
          if (k != j) denom *= z[j] - z[k];
        }
        const Complex value = eval_poly(a, z[j]);
        if (denom == Complex(0, 0)) {
          z[j] += Complex(1e-6, 1e-6);
          continue;
        }
        const Complex step = value / denom;
        z[j] -= step;
        if (!std::isfinite(z[j].real()) || !std::isfinite(z[j].imag())) finite = false;
        max_step = std::max(max_step, std::abs(step));
        max_z = std::max(max_z, std::abs(z[j]));
      }
      if (!finite) break;
      if (max_step <= 1e-14 * max_z) break;
    }
    if (finite) break;
    if (restart == 2) {
      throw std::runtime_error("roots_univariate: iteration diverged after restarts");
    }
  }

  for (int j = 0; j < n; ++j) {
    const double scale = norm1 * std::pow(std::max(1.0, std::abs(z[j])), n);
    if (std::abs(eval_poly(a, z[j])) > 1e-9 * scale) {
      out.warnings.push_back("root " + std::to_string(j) +
                             " did not reach the residual target (possible multiple root)");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(z[i] - z[j]) < 1e-5 * std::max(1.0, std::abs(z[i]))) {
        out.warnings.push_back("root cluster detected (possible multiplicity)");
        i = n;  // one warning is enough
        break;
      }
    }
  }
  out.roots = std::move(z);
  return out;
}

// ---------------------------------------------------------------------------
// Generic plane charts by branch continuation.

namespace {

struct BranchTracker {
  BiPoly q;       // dehomogenized curve
  BiPoly qy;      // d/dy
  Complex base_t;
  Complex base_eta;
  double scale;

  Complex newton_eta(Complex t, Complex eta) const {
    for (int iter = 0; iter < 60; ++iter) {
      const Complex value = q.eval(t, eta);
      if (std::abs(value) <= 1e-14 * scale * std::max(1.0, std::abs(eta))) return eta;
      const Complex deriv = qy.eval(t, eta);
      if (std::abs(deriv) < 1e-250) break;
      eta -= value / deriv;
    }
    if (std::abs(q.eval(t, eta)) > 1e-9 * scale * std::max(1.0, std::abs(eta))) {
      throw std::runtime_error("generic_plane_chart: branch tracking stalled");
    }
    return eta;
  }

  Complex track(Complex t) const {
    const int steps = std::max(8, static_cast<int>(std::ceil(std::abs(t - base_t) / 0.05)));
    Complex eta = base_eta;
    for (int k = 1; k <= steps; ++k) {
      const Complex tau = base_t + (t - base_t) * (static_cast<double>(k) / steps);
      eta = newton_eta(tau, eta);
    }
    return eta;
  }
};

}  // namespace

CurveChart generic_plane_chart(const HomogeneousPoly<Complex>& F) {
  if (F.nvars() != 3) throw std::invalid_argument("generic_plane_chart: need 3 variables");
  if (F.is_zero() || F.degree() < 1) {
    throw std::invalid_argument("generic_plane_chart: need a nonconstant curve");
  }
  const BiPoly q = dehomogenize(F);
  if (q.dy < 1) throw std::invalid_argument("generic_plane_chart: curve independent of y");

  const double scale = q.coeff_norm();
  const std::vector<Complex> base_shifts = {Complex(0, 0), Complex(0.31, 0.17),
                                            Complex(-0.42, 0.23), Complex(0.55, -0.37)};
  Complex base_t(0, 0);
  Complex base_eta(0, 0);
  bool found = false;
  std::string last_error = "no usable base point";
  for (const Complex& shift : base_shifts) {
    const auto slice = q.slice_at(shift);
    RootSet rs;
    try {
      rs = roots_univariate(slice);
    } catch (const std::exception& e) {
      last_error = e.what();
      continue;
    }
    if (rs.roots.empty()) {
      last_error = "no affine root above the base point";
      continue;
    }
    // Reject base points with clustered roots (discriminant nearly zero).
    double min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
      for (std::size_t j = i + 1; j < rs.roots.size(); ++j) {
        min_gap = std::min(min_gap, std::abs(rs.roots[i] - rs.roots[j]));
      }
    }
    if (rs.roots.size() > 1 && min_gap < 1e-6) {
      last_error = "base point sits over nearly coincident roots";
      continue;
    }
    // Branch choice: smallest argument in [0, 2*pi); ties by modulus.
    auto key = [](const Complex& z) {
      double arg = std::arg(z);
      if (arg < 0) arg += 2.0 * M_PI;
      return std::make_tuple(arg, std::abs(z), z.real(), z.imag());
    };
    base_eta = rs.roots.front();
    for (const auto& r : rs.roots) {
      if (key(r) < key(base_eta)) base_eta = r;
    }
    base_t = shift;
    found = true;
    break;
  }
  if (!found) {
    throw std::runtime_error("generic_plane_chart: " + last_error);
  }

  // Radius: keep away from branch points (discriminant roots) and from
  // leading-coefficient roots, where a branch escapes to infinity.
  double nearest = std::numeric_limits<double>::infinity();
  auto account_roots = [&](const std::vector<Complex>& coeffs) {
    double maxc = 0.0;
    for (const auto& v : coeffs) maxc = std::max(maxc, std::abs(v));
    if (maxc == 0.0) return;
    if (static_cast<int>(coeffs.size()) < 2) return;
    RootSet rs;
    try {
      rs = roots_univariate(coeffs);
    } catch (const std::exception&) {
      return;
    }
    for (const auto& r : rs.roots) nearest = std::min(nearest, std::abs(r - base_t));
  };
  if (q.dy >= 2) {
    try {
      account_roots(resultant_in_y(q, q.d_dy()));
    } catch (const std::runtime_error&) {
      throw std::invalid_argument(
          "generic_plane_chart: the discriminant vanishes identically (repeated component)");
    }
  }
  {
    // Leading y-coefficient as a polynomial in t.
    std::vector<Complex> lead(q.dt + 1);
    for (int i = 0; i <= q.dt; ++i) lead[i] = q.c[i][q.dy];
    account_roots(lead);
  }
  const double radius = std::min(0.8 * nearest, 2.0);
  if (!(radius > 1e-8)) {
    throw std::runtime_error("generic_plane_chart: base point too close to a branch point");
  }

  BranchTracker tracker{q, q.d_dy(), base_t, base_eta, std::max(scale, 1.0)};

  CurveChart chart;
  chart.name = "plane_chart_deg" + std::to_string(F.degree());
  chart.ambient_vars = 3;
  chart.param_count = 1;
  {
    std::ostringstream os;
    os << "disc of radius " << radius << " around t0 = (" << base_t.real() << ", "
       << base_t.imag() << "), branch tracked from eta(t0)";
    chart.domain_description = os.str();
  }
  chart.in_domain = [base_t, radius](std::span<const Complex> t) {
    return std::abs(t[0] - base_t) <= radius * (1.0 + 1e-9);
  };
  chart.map = [tracker](std::span<const Complex> t) {
    const Complex eta = tracker.track(t[0]);
    return std::vector<Complex>{t[0], eta, Complex(1.0, 0.0)};
  };
  chart.path_param = [base_t, radius](std::span<const double> s) {
    return std::vector<Complex>{base_t + 0.5 * radius * std::exp(kI * s[0])};
  };
  chart.default_rule = [](int n) { return periodic_trapezoid(n); };
  chart.sample = [base_t, radius](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);
    const double r = radius * 0.85 * std::sqrt(unit(rng));
    return std::vector<Complex>{base_t + r * std::exp(kI * angle(rng))};
  };
  chart.symbol = F;
  return chart;
}

// ---------------------------------------------------------------------------
// Intersection of plane curves.

HomogeneousPoly<Complex> substitute_linear(const HomogeneousPoly<Complex>& F,
                                           const std::vector<std::vector<Complex>>& a) {
  const int d = F.nvars();
  if (static_cast<int>(a.size()) != d) {
    throw std::invalid_argument("substitute_linear: matrix size != nvars");
  }
  // Precompute powers of each row's linear form up to the needed exponent.
  std::vector<std::vector<HomogeneousPoly<Complex>>> powers(d);
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(a[i].size()) != d) {
      throw std::invalid_argument("substitute_linear: matrix is not square");
    }
    powers[i].push_back(power_of_linear_form(std::span<const Complex>(a[i]), 0));
    for (int e = 1; e <= F.degree(); ++e) {
      powers[i].push_back(power_of_linear_form(std::span<const Complex>(a[i]), e));
    }
  }
  HomogeneousPoly<Complex> out(d, F.degree());
  for (const auto& [mono, coeff] : F.terms()) {
    HomogeneousPoly<Complex> term(d, 0);
    term.set_coeff(Monomial(d, 0), Complex(1.0, 0.0));
    for (int i = 0; i < d; ++i) {
      if (mono[i] > 0) term = term * powers[i][mono[i]];
    }
    out += coeff * term;
  }
  return out;
}

IntersectionSet intersect_plane_curves(const HomogeneousPoly<Complex>& F1,
                                       const HomogeneousPoly<Complex>& F2,
                                       unsigned long long seed) {
  if (F1.nvars() != 3 || F2.nvars() != 3) {
    throw std::invalid_argument("intersect_plane_curves: need plane curves (3 variables)");
  }
  if (F1.is_zero() || F2.is_zero() || F1.degree() < 1 || F2.degree() < 1) {
    throw std::invalid_argument("intersect_plane_curves: need nonzero curves of degree >= 1");
  }
  const int m = F1.degree();
  const int n = F2.degree();

  IntersectionSet out;
  out.seed = seed;
  auto rng = seeded_engine(seed);

  // Random unitary coordinate change; retried if it leaves intersections at
  // infinity (visible as a resultant degree drop) or degenerate leading
  // y-coefficients.
  std::vector<std::vector<Complex>> rotation;
  BiPoly g1, g2;
  std::vector<Complex> res;
  bool ok = false;
  for (int attempt = 0; attempt < 3 && !ok; ++attempt) {
    rotation = random_unitary(3, rng);
    const auto h1 = substitute_linear(F1, rotation);
    const auto h2 = substitute_linear(F2, rotation);
    g1 = dehomogenize(h1);
    g2 = dehomogenize(h2);
    // The y^m coefficient of g1 is the (constant) coefficient of the pure
    // y^m monomial of h1; a usable rotation keeps both leading coefficients
    // well away from zero so the formal and actual Sylvester sizes agree.
    if (g1.dy != m || g2.dy != n) continue;
    const double lead1 = std::abs(g1.c[0][m]);
    const double lead2 = std::abs(g2.c[0][n]);
    if (lead1 < 1e-6 * h1.sup_coeff_norm() || lead2 < 1e-6 * h2.sup_coeff_norm()) continue;
    res = resultant_in_y(g1, g2);  // throws on a common component
    // Bezout: the true resultant has degree m*n exactly when no intersection
    // was pushed to the line at infinity by this rotation.
    double maxc = 0.0;
    for (const auto& v : res) maxc = std::max(maxc, std::abs(v));
    if (static_cast<int>(res.size()) > m * n && std::abs(res[m * n]) >= 1e-8 * maxc) {
      res.resize(m * n + 1);
      ok = true;
    }
  }
  if (!ok) {
    out.warnings.push_back(
        "resultant degree drop persisted across retries; some intersections may be missing");
  }

  RootSet troots = roots_univariate(res);
  for (const auto& w : troots.warnings) out.warnings.push_back("resultant roots: " + w);

  const BiPoly g1t = g1.d_dt();
  const BiPoly g1y = g1.d_dy();
  const BiPoly g2t = g2.d_dt();
  const BiPoly g2y = g2.d_dy();
  const double scale1 = g1.coeff_norm();
  const double scale2 = g2.coeff_norm();

  std::vector<std::vector<Complex>> raw_points;
  for (const Complex& t0 : troots.roots) {
    // Candidate second coordinates: roots of g1(t0, .), scored by g2.
    RootSet etas;
    try {
      etas = roots_univariate(g1.slice_at(t0));
    } catch (const std::exception&) {
      out.warnings.push_back("no finite branch above a resultant root");
      continue;
    }
    if (etas.roots.empty()) {
      out.warnings.push_back("no finite branch above a resultant root");
      continue;
    }
    Complex eta = etas.roots.front();
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : etas.roots) {
      const double score = std::abs(g2.eval(t0, c));
      if (score < best) {
        best = score;
        eta = c;
      }
    }
    // Newton polish on the pair in the rotated affine chart.
    Complex t = t0;
    bool polished = false;
    for (int iter = 0; iter < 40; ++iter) {
      const Complex v1 = g1.eval(t, eta);
      const Complex v2 = g2.eval(t, eta);
      const double big = std::max(1.0, std::max(std::abs(t), std::abs(eta)));
      const double target1 = 1e-13 * scale1 * std::pow(big, m);
      const double target2 = 1e-13 * scale2 * std::pow(big, n);
      if (std::abs(v1) <= target1 && std::abs(v2) <= target2) {
        polished = true;
        break;
      }
      const Complex j11 = g1t.eval(t, eta), j12 = g1y.eval(t, eta);
      const Complex j21 = g2t.eval(t, eta), j22 = g2y.eval(t, eta);
      const Complex det = j11 * j22 - j12 * j21;
      if (std::abs(det) < 1e-250) break;
      const Complex dt = (v1 * j22 - v2 * j12) / det;
      const Complex dy = (j11 * v2 - j21 * v1) / det;
      t -= dt;
      eta -= dy;
    }
    if (!polished) {
      out.warnings.push_back("Newton polish did not fully converge (possible multiple point)");
    }
    raw_points.push_back(apply_matrix(rotation, std::vector<Complex>{t, eta, Complex(1, 0)}));
  }

  // Deduplicate multiplicity collapses after canonicalization.
  std::vector<std::vector<Complex>> canonical;
  for (auto& p : raw_points) {
    canonical.push_back(canonicalize_point(std::move(p)));
  }
  std::vector<bool> keep(canonical.size(), true);
  for (std::size_t i = 0; i < canonical.size(); ++i) {
    if (!keep[i]) continue;
    for (std::size_t j = i + 1; j < canonical.size(); ++j) {
      if (!keep[j]) continue;
      double dist = 0.0;
      for (int k = 0; k < 3; ++k) dist = std::max(dist, std::abs(canonical[i][k] - canonical[j][k]));
      if (dist < 1e-6) {
        keep[j] = false;
        out.warnings.push_back("coincident intersection points merged (multiplicity)");
      }
    }
  }
  for (std::size_t i = 0; i < canonical.size(); ++i) {
    if (keep[i]) out.points.push_back(std::move(canonical[i]));
  }
  std::sort(out.points.begin(), out.points.end(),
            [](const std::vector<Complex>& a, const std::vector<Complex>& b) {
              for (std::size_t k = 0; k < a.size(); ++k) {
                if (a[k].real() != b[k].real()) return a[k].real() < b[k].real();
                if (a[k].imag() != b[k].imag()) return a[k].imag() < b[k].imag();
              }
              return false;
            });
  if (static_cast<int>(out.points.size()) != m * n) {
    out.warnings.push_back("expected " + std::to_string(m * n) + " points, reporting " +
                           std::to_string(out.points.size()));
  }
  return out;
}

}  // namespace charvar
