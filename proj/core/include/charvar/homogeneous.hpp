// SPDX-FileCopyrightText: 2026 charvar contributors
// SPDX-License-Identifier: Apache-2.0
//
// Homogeneous multivariate polynomials over the two scalar domains, sparse
// term maps ordered graded-lexicographically, plus the symbol calculus
// F(d/dx) acting on polynomials and powers of linear forms.

#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "charvar/scalar.hpp"

namespace charvar {

/// Exponent tuple of a monomial; size = number of variables.
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

/// Graded-lexicographic term order: lower total degree first, and within a
/// degree the lexicographically larger exponent tuple first, so that for
/// d = 3, m = 2 iteration yields (2,0,0), (1,1,0), (1,0,1), (0,2,0),
/// (0,1,1), (0,0,2).
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

/// All monomials of the given total degree in `nvars` variables, in
/// graded-lexicographic order.  Size is C(degree + nvars - 1, nvars - 1).
std::vector<Monomial> monomial_basis(int nvars, int degree);

/// Binomial coefficient with overflow checking (throws std::overflow_error).
long long binomial(long long n, long long k);

namespace detail {

template <class K>
K pow_k(K base, int e) {
  K out = ScalarTraits<K>::one();
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

/// Multinomial coefficient m! / (a_0! ... a_k!) for sum(a) = m <= 20.
unsigned long long multinomial(const Monomial& exps);

}  // namespace detail

/// A homogeneous polynomial: every stored term has the same total degree.
/// The zero polynomial stores no terms but keeps its (nvars, degree) type.
template <class K>
class HomogeneousPoly {
 public:
  using TermMap = std::map<Monomial, K, GrlexLess>;

  HomogeneousPoly() : nvars_(1), degree_(0) {}

  HomogeneousPoly(int nvars, int degree) : nvars_(nvars), degree_(degree) {
    if (nvars < 1) throw std::invalid_argument("HomogeneousPoly: nvars must be >= 1");
    if (degree < 0) throw std::invalid_argument("HomogeneousPoly: degree must be >= 0");
  }

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Insert or overwrite one term; zero coefficients are never stored.
  void set_coeff(const Monomial& mono, K value) {
    check_monomial(mono);
    if (ScalarTraits<K>::is_zero(value)) {
      terms_.erase(mono);
    } else {
      terms_[mono] = std::move(value);
    }
  }

  void add_to_coeff(const Monomial& mono, const K& value) {
    check_monomial(mono);
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
      if (!ScalarTraits<K>::is_zero(value)) terms_.emplace(mono, value);
      return;
    }
    it->second += value;
    if (ScalarTraits<K>::is_zero(it->second)) terms_.erase(it);
  }

  K coeff(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? ScalarTraits<K>::zero() : it->second;
  }

  HomogeneousPoly& operator+=(const HomogeneousPoly& o) {
    check_same_shape(o, "+");
    for (const auto& [mono, c] : o.terms_) add_to_coeff(mono, c);
    return *this;
  }

  HomogeneousPoly& operator-=(const HomogeneousPoly& o) {
    check_same_shape(o, "-");
    for (const auto& [mono, c] : o.terms_) add_to_coeff(mono, -c);
    return *this;
  }

  HomogeneousPoly& operator*=(const K& s) {
    if (ScalarTraits<K>::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [mono, c] : terms_) c *= s;
    return *this;
  }

  friend HomogeneousPoly operator+(HomogeneousPoly a, const HomogeneousPoly& b) { return a += b; }
  friend HomogeneousPoly operator-(HomogeneousPoly a, const HomogeneousPoly& b) { return a -= b; }
  friend HomogeneousPoly operator*(HomogeneousPoly a, const K& s) { return a *= s; }
  friend HomogeneousPoly operator*(const K& s, HomogeneousPoly a) { return a *= s; }

  /// Product of homogeneous polynomials; degrees add.
  friend HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    if (a.nvars_ != b.nvars_) {
      throw std::invalid_argument("HomogeneousPoly: operand variable counts differ in *");
    }
    HomogeneousPoly out(a.nvars_, a.degree_ + b.degree_);
    Monomial mono(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        for (int i = 0; i < a.nvars_; ++i) mono[i] = ma[i] + mb[i];
        out.add_to_coeff(mono, ca * cb);
      }
    }
    return out;
  }

  friend bool operator==(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  K evaluate(std::span<const K> x) const {
    if (static_cast<int>(x.size()) != nvars_) {
      throw std::invalid_argument("HomogeneousPoly::evaluate: point size != nvars");
    }
    K acc = ScalarTraits<K>::zero();
    for (const auto& [mono, c] : terms_) {
      K term = c;
      for (int i = 0; i < nvars_; ++i) {
        if (mono[i] > 0) term *= detail::pow_k(x[i], mono[i]);
      }
      acc += term;
    }
    return acc;
  }

  /// Dense coefficient vector in monomial_basis(nvars, degree) order.
  std::vector<K> coeff_vector() const {
    std::vector<K> out;
    const auto basis = monomial_basis(nvars_, degree_);
    out.reserve(basis.size());
    for (const auto& mono : basis) out.push_back(coeff(mono));
    return out;
  }

  static HomogeneousPoly from_coeff_vector(int nvars, int degree, std::span<const K> coeffs) {
    const auto basis = monomial_basis(nvars, degree);
    if (coeffs.size() != basis.size()) {
      throw std::invalid_argument("HomogeneousPoly::from_coeff_vector: wrong length");
    }
    HomogeneousPoly out(nvars, degree);
    for (std::size_t i = 0; i < basis.size(); ++i) out.set_coeff(basis[i], coeffs[i]);
    return out;
  }

  /// Largest coefficient magnitude (0 for the zero polynomial).
  double sup_coeff_norm() const {
    double best = 0.0;
    for (const auto& [mono, c] : terms_) {
      best = std::max(best, ScalarTraits<K>::magnitude(c));
    }
    return best;
  }

 private:
  void check_monomial(const Monomial& mono) const {
    if (static_cast<int>(mono.size()) != nvars_) {
      throw std::invalid_argument("HomogeneousPoly: monomial has wrong variable count");
    }
    for (int e : mono) {
      if (e < 0) throw std::invalid_argument("HomogeneousPoly: negative exponent");
    }
    if (total_degree(mono) != degree_) {
      throw std::invalid_argument("HomogeneousPoly: term degree " +
                                  std::to_string(total_degree(mono)) +
                                  " differs from polynomial degree " + std::to_string(degree_));
    }
  }

  void check_same_shape(const HomogeneousPoly& o, const char* op) const {
    if (nvars_ != o.nvars_ || degree_ != o.degree_) {
      throw std::invalid_argument(std::string("HomogeneousPoly: operand shapes differ in ") + op);
    }
  }

  int nvars_;
  int degree_;
  TermMap terms_;
};

/// Apply the constant-coefficient operator F(d/dx) to P.
///
/// Each operator term c * x^alpha acts on a polynomial term b * x^beta as
/// c * b * prod_i beta_i (beta_i - 1) ... (beta_i - alpha_i + 1) * x^(beta-alpha)
/// when beta >= alpha componentwise, and kills it otherwise.  For
/// deg P >= deg F the result is homogeneous of degree deg P - deg F; for
/// deg P < deg F it is the zero polynomial of degree 0 by convention.
template <class K>
HomogeneousPoly<K> apply_diff_operator(const HomogeneousPoly<K>& F, const HomogeneousPoly<K>& P) {
  if (F.nvars() != P.nvars()) {
    throw std::invalid_argument("apply_diff_operator: variable counts differ");
  }
  const int d = F.nvars();
  if (P.degree() < F.degree()) {
    return HomogeneousPoly<K>(d, 0);
  }
  HomogeneousPoly<K> out(d, P.degree() - F.degree());
  Monomial mono(d);
  for (const auto& [alpha, cf] : F.terms()) {
    for (const auto& [beta, cp] : P.terms()) {
      bool divides = true;
      for (int i = 0; i < d; ++i) {
        if (beta[i] < alpha[i]) {
          divides = false;
          break;
        }
      }
      if (!divides) continue;
      K factor = cf * cp;
      for (int i = 0; i < d; ++i) {
        for (int t = 0; t < alpha[i]; ++t) {
          factor *= ScalarTraits<K>::from_int(beta[i] - t);
        }
        mono[i] = beta[i] - alpha[i];
      }
      out.add_to_coeff(mono, factor);
    }
  }
  return out;
}

/// d/dx_axis as a special case of the symbol calculus.
template <class K>
HomogeneousPoly<K> partial_derivative(const HomogeneousPoly<K>& P, int axis) {
  if (axis < 0 || axis >= P.nvars()) {
    throw std::invalid_argument("partial_derivative: axis out of range");
  }
  HomogeneousPoly<K> xi(P.nvars(), 1);
  Monomial mono(P.nvars(), 0);
  mono[axis] = 1;
  xi.set_coeff(mono, ScalarTraits<K>::one());
  return apply_diff_operator(xi, P);
}

/// (p . x)^m expanded by the multinomial theorem; degree-m homogeneous in
/// x with nvars = p.size().  Requires m <= 20 (multinomials stay in 64 bits).
template <class K>
HomogeneousPoly<K> power_of_linear_form(std::span<const K> p, int m) {
  const int d = static_cast<int>(p.size());
  if (d < 1) throw std::invalid_argument("power_of_linear_form: empty linear form");
  if (m < 0) throw std::invalid_argument("power_of_linear_form: negative exponent");
  if (m > 20) throw std::invalid_argument("power_of_linear_form: exponent above supported 20");
  HomogeneousPoly<K> out(d, m);
  for (const auto& mono : monomial_basis(d, m)) {
    K c = ScalarTraits<K>::from_int(static_cast<long long>(detail::multinomial(mono)));
    bool zero = false;
    for (int i = 0; i < d && !zero; ++i) {
      if (mono[i] == 0) continue;
      if (ScalarTraits<K>::is_zero(p[i])) {
        zero = true;
      } else {
        c *= detail::pow_k(p[i], mono[i]);
      }
    }
    if (!zero) out.set_coeff(mono, std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Projective points.

/// Scale so the last coordinate that is nonzero (floating: relative to the
/// largest magnitude, cutoff 1e-12) becomes exactly 1.  Throws on the zero
/// vector, which is not a projective point.
template <class K>
std::vector<K> canonicalize_point(std::vector<K> p) {
  if (p.empty()) throw std::invalid_argument("canonicalize_point: empty coordinate vector");
  double sup = 0.0;
  for (const auto& c : p) sup = std::max(sup, ScalarTraits<K>::magnitude(c));
  if (sup == 0.0) throw std::invalid_argument("canonicalize_point: zero vector");
  int last = -1;
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    if constexpr (ScalarTraits<K>::is_exact) {
      if (!ScalarTraits<K>::is_zero(p[i])) {
        last = i;
        break;
      }
    } else {
      if (ScalarTraits<K>::magnitude(p[i]) > 1e-12 * sup) {
        last = i;
        break;
      }
    }
  }
  if (last < 0) throw std::invalid_argument("canonicalize_point: no usable nonzero coordinate");
  const K pivot = p[last];
  for (auto& c : p) c /= pivot;
  p[last] = ScalarTraits<K>::one();
  return p;
}

/// Divide by the largest coordinate magnitude: unit sup-norm, phases kept.
std::vector<Complex> sup_normalize(std::vector<Complex> p);

template <class K>
K dot(std::span<const K> a, std::span<const K> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  K acc = ScalarTraits<K>::zero();
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

// ---------------------------------------------------------------------------
// Domain conversion (exact -> floating).

HomogeneousPoly<Complex> to_float(const HomogeneousPoly<GaussianRational>& p);
std::vector<Complex> to_float(const std::vector<GaussianRational>& p);

}  // namespace charvar
