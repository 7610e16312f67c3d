// SPDX-FileCopyrightText: 2026 charvar contributors
// SPDX-License-Identifier: Apache-2.0

#include "charvar/homogeneous.hpp"

#include <limits>

namespace charvar {

std::vector<Monomial> monomial_basis(int nvars, int degree) {
  if (nvars < 1) throw std::invalid_argument("monomial_basis: nvars must be >= 1");
  if (degree < 0) throw std::invalid_argument("monomial_basis: degree must be >= 0");
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(binomial(degree + nvars - 1, nvars - 1)));
  Monomial current(nvars, 0);
  // Depth-first with the leading exponent largest first reproduces the
  // graded-lex order within the fixed degree.
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars - 1) {
      current[var] = remaining;
      out.push_back(current);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      current[var] = e;
      self(self, var + 1, remaining - e);
    }
  };
  rec(rec, 0, degree);
  return out;
}

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (long long i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned __int128>(n - k + i);
    acc /= static_cast<unsigned __int128>(i);
    if (acc > static_cast<unsigned __int128>(std::numeric_limits<long long>::max())) {
      throw std::overflow_error("binomial: value exceeds 64-bit range");
    }
  }
  return static_cast<long long>(acc);
}

namespace detail {

unsigned long long multinomial(const Monomial& exps) {
  const int m = total_degree(exps);
  if (m > 20) throw std::invalid_argument("multinomial: degree above supported 20");
  // Product of binomials over prefix sums; stays within 64 bits for m <= 20.
  unsigned long long acc = 1;
  long long used = 0;
  for (int e : exps) {
    used += e;
    acc *= static_cast<unsigned long long>(binomial(used, e));
  }
  return acc;
}

}  // namespace detail

std::vector<Complex> sup_normalize(std::vector<Complex> p) {
  double sup = 0.0;
  for (const auto& c : p) sup = std::max(sup, std::abs(c));
  if (sup == 0.0) throw std::invalid_argument("sup_normalize: zero vector");
  for (auto& c : p) c /= sup;
  return p;
}

HomogeneousPoly<Complex> to_float(const HomogeneousPoly<GaussianRational>& p) {
  HomogeneousPoly<Complex> out(p.nvars(), p.degree());
  for (const auto& [mono, c] : p.terms()) out.set_coeff(mono, c.to_complex());
  return out;
}

std::vector<Complex> to_float(const std::vector<GaussianRational>& p) {
  std::vector<Complex> out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(c.to_complex());
  return out;
}

}  // namespace charvar
