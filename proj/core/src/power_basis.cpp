// SPDX-FileCopyrightText: 2026 charvar contributors
// SPDX-License-Identifier: Apache-2.0

#include "charvar/power_basis.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "charvar/kernel.hpp"

namespace charvar {

namespace {

/// m (m-1) ... (m-n+1) as a double; the natural coefficient scale of
/// F(d/dx) acting on degree-m polynomials (Eq. f7 mechanism).
double falling_factorial(int m, int n) {
  double out = 1.0;
  for (int k = 0; k < n; ++k) out *= static_cast<double>(m - k);
  return std::max(std::abs(out), 1.0);
}

Matrix<Complex> powers_coeff_matrix(const std::vector<HomogeneousPoly<Complex>>& powers,
                                    int ambient) {
  Matrix<Complex> a(static_cast<int>(powers.size()), ambient);
  for (int i = 0; i < static_cast<int>(powers.size()); ++i) {
    const auto coeffs = powers[i].coeff_vector();
    for (int j = 0; j < ambient; ++j) a(i, j) = coeffs[j];
  }
  return a;
}

/// Least-squares expansion of target in the basis powers; returns the
/// coefficients and the coefficientwise reconstruction residual relative to
/// the target's sup-norm.
std::pair<std::vector<Complex>, double> solve_in_powers(
    const std::vector<HomogeneousPoly<Complex>>& powers,
    const HomogeneousPoly<Complex>& target) {
  const int r = static_cast<int>(powers.size());
  const auto b = target.coeff_vector();
  const int ambient = static_cast<int>(b.size());
  Matrix<Complex> a(ambient, r);
  for (int i = 0; i < r; ++i) {
    const auto col = powers[i].coeff_vector();
    for (int j = 0; j < ambient; ++j) a(j, i) = col[j];
  }
  auto sol = solve(a, std::span<const Complex>(b));
  HomogeneousPoly<Complex> recon(target.nvars(), target.degree());
  for (int i = 0; i < r; ++i) recon += powers[i] * sol.x[i];
  recon -= target;
  const double rel = recon.sup_coeff_norm() / std::max(target.sup_coeff_norm(), 1e-300);
  return {std::move(sol.x), rel};
}

}  // namespace

PowerBasis build_power_basis(const HomogeneousPoly<Complex>& F, int m, const CurveChart& chart,
                             unsigned long long seed) {
  if (m < 0) throw std::invalid_argument("build_power_basis: m must be >= 0");
  if (F.is_zero()) throw std::invalid_argument("build_power_basis: zero symbol");
  if (F.nvars() != chart.ambient_vars) {
    throw std::invalid_argument("build_power_basis: symbol/chart variable counts differ");
  }
  const int d = F.nvars();
  const int n = F.degree();
  const auto dims = kernel_dimension_predicted(d, n, m);
  const int r = dims.kernel_dim;
  const int ambient = dims.ambient_dim;

  std::mt19937_64 rng(seed);
  PowerBasis basis;
  basis.F = F;
  basis.m = m;
  basis.r = r;
  basis.seed = seed;

  const double f_scale = std::max(F.sup_coeff_norm(), 1e-300);
  for (int attempt = 0; attempt < 4; ++attempt) {
    basis.params.clear();
    basis.points.clear();
    basis.powers.clear();
    bool sampled_ok = true;
    for (int i = 0; i < r && sampled_ok; ++i) {
      const auto t = chart.sample(rng);
      auto point = sup_normalize(chart.map(t));
      // Certify the sample actually lies on {F = 0}; a bad chart/symbol pair
      // would silently break every kernel property downstream.
      std::vector<Complex> x(point.begin(), point.end());
      if (std::abs(F.evaluate(x)) > 1e-8 * f_scale) {
        sampled_ok = false;
        break;
      }
      basis.params.push_back(t);
      basis.points.push_back(std::move(point));
      basis.powers.push_back(
          power_of_linear_form(std::span<const Complex>(basis.points.back()), m));
    }
    if (!sampled_ok) continue;
    const auto a = powers_coeff_matrix(basis.powers, ambient);
    const auto rank = rank_nullspace(a, TolerancePolicy{});
    if (rank.rank == r) return basis;
  }
  throw DegenerateConfigurationError(
      "build_power_basis: sampled points stayed rank-deficient after 3 resamples "
      "(degenerate configuration)",
      basis.points);
}

ExpandResult expand_in_basis(const PowerBasis& basis, const HomogeneousPoly<Complex>& P) {
  if (P.nvars() != basis.F.nvars()) {
    throw std::invalid_argument("expand_in_basis: variable counts differ");
  }
  if (P.degree() != basis.m) {
    throw std::invalid_argument("expand_in_basis: degree differs from the basis degree");
  }
  ExpandResult out;
  const auto fp = apply_diff_operator(basis.F, P);
  const double scale = falling_factorial(basis.m, basis.F.degree()) * basis.F.sup_coeff_norm() *
                       std::max(P.sup_coeff_norm(), 1e-300);
  out.kernel_residual = fp.sup_coeff_norm() / scale;
  if (out.kernel_residual > 1e-6) {
    out.in_kernel = false;
    return out;
  }
  out.in_kernel = true;
  auto [coeffs, rel] = solve_in_powers(basis.powers, P);
  out.coeffs = std::move(coeffs);
  out.reconstruction_residual = rel;
  if (rel > 1e-6) {
    throw std::runtime_error(
        "expand_in_basis: kernel element failed to reconstruct (ill-conditioned basis)");
  }
  return out;
}

std::vector<Complex> mu_coordinates(const PowerBasis& basis, const CurveChart& chart,
                                    std::span<const Complex> t) {
  if (static_cast<int>(t.size()) != chart.param_count) {
    throw std::invalid_argument("mu_coordinates: wrong parameter count");
  }
  if (!chart.in_domain(t)) {
    throw std::domain_error("mu_coordinates: parameter outside the chart domain");
  }
  const auto point = sup_normalize(chart.map(t));
  const auto target = power_of_linear_form(std::span<const Complex>(point), basis.m);
  auto [coeffs, rel] = solve_in_powers(basis.powers, target);
  if (rel > 1e-8) {
    throw std::runtime_error("mu_coordinates: expansion residual above 1e-8 (basis unusable)");
  }
  return coeffs;
}

MomentReport moment_matrix(const std::vector<std::function<Complex(double)>>& mu, double a,
                           double b, double s0, int quad_nodes) {
  const int r = static_cast<int>(mu.size());
  MomentReport out;
  out.theta = Matrix<Complex>(r, r);
  if (r == 0) {
    out.abs_det = 1.0;
    out.condition = 1.0;
    return out;
  }
  const auto rule = gauss_legendre(quad_nodes, a, b);
  // Cache mu and l_j values at the nodes; theta(j, i) = sum_k w_k mu_i(u_k)
  // u_k^(j-1) e^(s0 u_k).
  const int nk = static_cast<int>(rule.weights.size());
  std::vector<std::vector<Complex>> mu_at(r, std::vector<Complex>(nk));
  for (int i = 0; i < r; ++i) {
    for (int k = 0; k < nk; ++k) mu_at[i][k] = mu[i](rule.nodes[k][0]);
  }
  for (int j = 0; j < r; ++j) {
    for (int i = 0; i < r; ++i) {
      Complex acc(0, 0);
      for (int k = 0; k < nk; ++k) {
        const double u = rule.nodes[k][0];
        acc += rule.weights[k] * mu_at[i][k] * std::pow(u, j) * std::exp(s0 * u);
      }
      out.theta(j, i) = acc;
    }
  }
  Eigen::MatrixXcd t(r, r);
  for (int j = 0; j < r; ++j) {
    for (int i = 0; i < r; ++i) t(j, i) = out.theta(j, i);
  }
  out.abs_det = std::abs(Eigen::PartialPivLU<Eigen::MatrixXcd>(t).determinant());
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(t);
  const auto& sigma = svd.singularValues();
  out.condition = sigma(r - 1) > 0.0 ? sigma(0) / sigma(r - 1)
                                     : std::numeric_limits<double>::infinity();
  double hadamard = 1.0;
  for (int j = 0; j < r; ++j) hadamard *= t.row(j).norm();
  // Two complementary deficiency signals: the determinant against its
  // Hadamard bound, and the SVD rank test.  The latter is needed when a
  // whole row nearly vanishes — the Hadamard bound collapses with it and
  // the det criterion alone would call the matrix regular.
  out.singular = out.abs_det <= 1e-10 * std::max(hadamard, 1e-300) ||
                 sigma(r - 1) <= 1e-10 * sigma(0);
  return out;
}

}  // namespace charvar
