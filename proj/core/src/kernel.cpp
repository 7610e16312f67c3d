// SPDX-FileCopyrightText: 2026 charvar contributors
// SPDX-License-Identifier: Apache-2.0

#include "charvar/kernel.hpp"

#include <stdexcept>

#include "charvar/linalg.hpp"

namespace charvar {

KernelDims kernel_dimension_predicted(int d, int n, int m) {
  if (d < 1) throw std::invalid_argument("kernel_dimension_predicted: d must be >= 1");
  if (n < 1) throw std::invalid_argument("kernel_dimension_predicted: n must be >= 1");
  if (m < 0) throw std::invalid_argument("kernel_dimension_predicted: m must be >= 0");
  KernelDims out;
  out.ambient_dim = binomial(m + d - 1, d - 1);
  // F(d/dx): S_m -> S_{m-n} is onto for every nonzero symbol (it is dual to
  // multiplication by F, which is injective), so the kernel dimension is the
  // difference of the two ambient dimensions.
  out.kernel_dim = m >= n ? out.ambient_dim - binomial(m - n + d - 1, d - 1) : out.ambient_dim;
  return out;
}

std::vector<HomogeneousPoly<GaussianRational>> kernel_basis(
    const HomogeneousPoly<GaussianRational>& F, int m) {
  if (F.is_zero()) throw std::invalid_argument("kernel_basis: zero symbol");
  const int d = F.nvars();
  const int n = F.degree();
  const auto source = monomial_basis(d, m);
  const int dim_source = static_cast<int>(source.size());

  Matrix<GaussianRational> a(0, dim_source);
  if (m >= n) {
    const auto target = monomial_basis(d, m - n);
    // Column j holds the coefficient vector of F(d/dx) x^source[j].
    a = Matrix<GaussianRational>(static_cast<int>(target.size()), dim_source);
    std::map<Monomial, int, GrlexLess> target_index;
    for (std::size_t i = 0; i < target.size(); ++i) {
      target_index.emplace(target[i], static_cast<int>(i));
    }
    for (int j = 0; j < dim_source; ++j) {
      HomogeneousPoly<GaussianRational> basis_elt(d, m);
      basis_elt.set_coeff(source[j], GaussianRational(1));
      const auto image = apply_diff_operator(F, basis_elt);
      for (const auto& [mono, c] : image.terms()) {
        a(target_index.at(mono), j) = c;
      }
    }
  }
  // For m < n the operator annihilates everything and the matrix stays 0 x N.

  const auto ns = rank_nullspace(a);
  std::vector<HomogeneousPoly<GaussianRational>> out;
  out.reserve(ns.nullspace.size());
  for (const auto& vec : ns.nullspace) {
    auto p = HomogeneousPoly<GaussianRational>::from_coeff_vector(d, m, vec);
    // Normalize: leading (graded-lex first) coefficient 1.
    const GaussianRational lead = p.terms().begin()->second;
    p *= GaussianRational(1) / lead;
    out.push_back(std::move(p));
  }
  return out;
}

long long bott_dimension(int n, int k, int q) {
  if (n < 1) throw std::invalid_argument("bott_dimension: n must be >= 1");
  if (q < 0 || q > n) return 0;
  if (q == 0 && k >= 0) return binomial(k + n, k);
  if (q == n && k <= -n - 1) return binomial(-k - 1, -k - 1 - n);
  return 0;
}

}  // namespace charvar
