// SPDX-FileCopyrightText: 2026 charvar contributors
// SPDX-License-Identifier: Apache-2.0

#include "charvar/incidence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "charvar/linalg.hpp"

namespace charvar {

namespace {

template <class K>
void check_point_set(const std::vector<std::vector<K>>& points, std::size_t min_count) {
  if (points.size() < min_count) {
    throw std::invalid_argument("point set smaller than required minimum");
  }
  for (const auto& p : points) {
    if (p.size() != points.front().size() || p.empty()) {
      throw std::invalid_argument("point set has inconsistent coordinate counts");
    }
  }
}

/// Transposed coefficient matrix of { (p_i . x)^r }: columns indexed by the
/// points, so the right nullspace consists of the syzygy vectors lambda.
template <class K>
Matrix<K> syzygy_matrix(const std::vector<std::vector<K>>& points, int r) {
  const int d = static_cast<int>(points.front().size());
  const auto basis = monomial_basis(d, r);
  const int q = static_cast<int>(points.size());
  Matrix<K> a(static_cast<int>(basis.size()), q);
  for (int i = 0; i < q; ++i) {
    const auto power = power_of_linear_form(std::span<const K>(points[i]), r);
    const auto col = power.coeff_vector();
    for (std::size_t j = 0; j < basis.size(); ++j) a(static_cast<int>(j), i) = col[j];
  }
  return a;
}

template <class K>
bool entries_all_nonzero(const std::vector<K>& v) {
  if constexpr (ScalarTraits<K>::is_exact) {
    for (const auto& c : v) {
      if (ScalarTraits<K>::is_zero(c)) return false;
    }
    return true;
  } else {
    double sup = 0.0;
    for (const auto& c : v) sup = std::max(sup, ScalarTraits<K>::magnitude(c));
    if (sup == 0.0) return false;
    for (const auto& c : v) {
      if (ScalarTraits<K>::magnitude(c) <= 1e-9 * sup) return false;
    }
    return true;
  }
}

/// Search the nullspace for a combination with every coefficient nonzero:
/// basis vectors first, then 100 random small-integer combinations.
template <class K>
void search_all_nonzero(SyzygyReport<K>& report, const std::vector<std::vector<K>>& nullspace,
                        unsigned long long seed) {
  if (nullspace.empty()) return;
  report.syzygy = nullspace.front();
  for (const auto& v : nullspace) {
    if (entries_all_nonzero(v)) {
      report.syzygy = v;
      report.all_coeffs_nonzero = true;
      return;
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> small(-9, 9);
  const std::size_t q = nullspace.front().size();
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<K> combo(q, ScalarTraits<K>::zero());
    for (const auto& v : nullspace) {
      int c = 0;
      while (c == 0) c = small(rng);
      const K factor = ScalarTraits<K>::from_int(c);
      for (std::size_t i = 0; i < q; ++i) combo[i] += factor * v[i];
    }
    if (entries_all_nonzero(combo)) {
      report.syzygy = std::move(combo);
      report.all_coeffs_nonzero = true;
      return;
    }
  }
}

template <class K, class... PolicyArgs>
SyzygyReport<K> serret_syzygy_impl(const std::vector<std::vector<K>>& points, int r,
                                   unsigned long long seed, PolicyArgs&&... policy) {
  check_point_set(points, 2);
  if (r < 1) throw std::invalid_argument("serret_syzygy: power must be >= 1");
  SyzygyReport<K> report;
  report.points = points;
  report.r = r;
  const auto a = syzygy_matrix(points, r);
  const auto result = rank_nullspace(a, std::forward<PolicyArgs>(policy)...);
  report.nullspace_dim = static_cast<int>(result.nullspace.size());
  search_all_nonzero(report, result.nullspace, seed);
  return report;
}

/// Evaluation matrix: rows = points, columns = degree-`degree` monomials.
template <class K, class... PolicyArgs>
std::vector<HomogeneousPoly<K>> curves_through_points_impl(
    int degree, const std::vector<std::vector<K>>& points, PolicyArgs&&... policy) {
  if (degree < 0) throw std::invalid_argument("curves_through_points: negative degree");
  check_point_set(points, 1);
  const int d = static_cast<int>(points.front().size());
  const auto basis = monomial_basis(d, degree);
  Matrix<K> a(static_cast<int>(points.size()), static_cast<int>(basis.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      K value = ScalarTraits<K>::one();
      for (int axis = 0; axis < d; ++axis) {
        if (basis[j][axis] > 0) value *= detail::pow_k(points[i][axis], basis[j][axis]);
      }
      a(static_cast<int>(i), static_cast<int>(j)) = value;
    }
  }
  const auto result = rank_nullspace(a, std::forward<PolicyArgs>(policy)...);
  std::vector<HomogeneousPoly<K>> out;
  out.reserve(result.nullspace.size());
  for (const auto& v : result.nullspace) {
    out.push_back(HomogeneousPoly<K>::from_coeff_vector(d, degree, v));
  }
  return out;
}

/// |C(p)| normalized by |coeffs| * |p|_sup^deg, the dimensionless evaluation.
double normalized_value(const HomogeneousPoly<Complex>& c, const std::vector<Complex>& p) {
  double sup = 0.0;
  for (const auto& coord : p) sup = std::max(sup, std::abs(coord));
  const double scale = std::max(c.sup_coeff_norm(), 1e-300) *
                       std::pow(std::max(sup, 1e-300), c.degree());
  return std::abs(c.evaluate(std::span<const Complex>(p))) / scale;
}

}  // namespace

SyzygyReport<Complex> serret_syzygy(const std::vector<std::vector<Complex>>& points, int r,
                                    unsigned long long seed) {
  return serret_syzygy_impl(points, r, seed, TolerancePolicy{});
}

SyzygyReport<GaussianRational> serret_syzygy(
    const std::vector<std::vector<GaussianRational>>& points, int r, unsigned long long seed) {
  return serret_syzygy_impl(points, r, seed);
}

std::vector<HomogeneousPoly<Complex>> curves_through_points(
    int degree, const std::vector<std::vector<Complex>>& points, const TolerancePolicy& policy) {
  return curves_through_points_impl(degree, points, policy);
}

std::vector<HomogeneousPoly<GaussianRational>> curves_through_points(
    int degree, const std::vector<std::vector<GaussianRational>>& points) {
  return curves_through_points_impl(degree, points);
}

CBReport cayley_bacharach_check(const HomogeneousPoly<Complex>& F1,
                                const HomogeneousPoly<Complex>& F2, int gamma,
                                unsigned long long seed,
                                const std::optional<std::vector<int>>& removed_indices) {
  const int m = F1.degree();
  const int n = F2.degree();
  if (gamma < 3 || gamma > m + n) {
    throw std::invalid_argument("cayley_bacharach_check: need 3 <= gamma <= deg F1 + deg F2");
  }
  CBReport report;
  report.m = m;
  report.n = n;
  report.gamma = gamma;
  report.seed = seed;

  auto intersection = intersect_plane_curves(F1, F2, seed);
  report.intersection = std::move(intersection.points);
  report.warnings = std::move(intersection.warnings);

  const int e = (gamma - 1) * (gamma - 2) / 2;
  const int total = static_cast<int>(report.intersection.size());
  if (total < e + 1) {
    throw std::runtime_error(
        "cayley_bacharach_check: too few intersection points for this gamma "
        "(degenerate intersection)");
  }
  if (total != m * n) {
    report.warnings.push_back("non-transversal intersection: point count differs from Bezout");
  }

  if (removed_indices.has_value()) {
    report.removed = *removed_indices;
    if (static_cast<int>(report.removed.size()) != e) {
      throw std::invalid_argument("cayley_bacharach_check: removed_indices must have size e");
    }
    std::vector<bool> seen(total, false);
    for (int idx : report.removed) {
      if (idx < 0 || idx >= total || seen[idx]) {
        throw std::invalid_argument("cayley_bacharach_check: removed_indices invalid");
      }
      seen[idx] = true;
    }
  } else {
    // Seeded removal, stream-separated from the intersection pipeline's RNG.
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 0x51AFD);
    std::vector<int> idx(total);
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    report.removed.assign(idx.begin(), idx.begin() + e);
  }
  std::sort(report.removed.begin(), report.removed.end());

  std::vector<std::vector<Complex>> remaining;
  std::vector<std::vector<Complex>> removed_points;
  for (int i = 0; i < total; ++i) {
    if (std::binary_search(report.removed.begin(), report.removed.end(), i)) {
      removed_points.push_back(report.intersection[i]);
    } else {
      remaining.push_back(report.intersection[i]);
    }
  }

  // Rank decisions here concern points recovered by the numerical
  // intersection solver, whose error (~1e-12 relative) dwarfs machine
  // roundoff.  A relative singular-value cutoff of 1e-8 sits several orders
  // above that error floor and several below the smallest singular value a
  // non-degenerate configuration produces.
  const TolerancePolicy recovered{1e-8 / std::numeric_limits<double>::epsilon(), 0.0};

  const auto curves = curves_through_points(m + n - gamma, remaining, recovered);
  report.curve_count = static_cast<int>(curves.size());
  report.applicable = report.curve_count > 0;
  report.max_abs_value = 0.0;
  for (const auto& curve : curves) {
    for (const auto& p : removed_points) {
      report.max_abs_value = std::max(report.max_abs_value, normalized_value(curve, p));
    }
  }
  report.all_vanish = report.max_abs_value <= 1e-6;

  // The exception clause: do the removed points lie on a curve of degree
  // gamma - 3?  For gamma = 3 that degree is 0 and no nonzero constant
  // vanishes anywhere, so the detector correctly never fires.
  report.exception_fires = !curves_through_points(gamma - 3, removed_points, recovered).empty();
  return report;
}

AFBGResult afbg_decompose(const HomogeneousPoly<Complex>& L, const HomogeneousPoly<Complex>& F,
                          const HomogeneousPoly<Complex>& G) {
  const int d = L.nvars();
  if (F.nvars() != d || G.nvars() != d) {
    throw std::invalid_argument("afbg_decompose: variable counts differ");
  }
  if (F.is_zero() || G.is_zero()) {
    throw std::invalid_argument("afbg_decompose: F and G must be nonzero");
  }
  if (L.degree() < std::max(F.degree(), G.degree())) {
    throw std::invalid_argument("afbg_decompose: need deg L >= max(deg F, deg G)");
  }
  const int da = L.degree() - F.degree();
  const int db = L.degree() - G.degree();
  const auto basis_a = monomial_basis(d, da);
  const auto basis_b = monomial_basis(d, db);
  const auto basis_l = monomial_basis(d, L.degree());
  const int rows = static_cast<int>(basis_l.size());
  const int cols = static_cast<int>(basis_a.size() + basis_b.size());

  auto shifted_column = [&](const Monomial& alpha, const HomogeneousPoly<Complex>& h) {
    HomogeneousPoly<Complex> mono(d, total_degree(alpha));
    mono.set_coeff(alpha, Complex(1.0, 0.0));
    return (mono * h).coeff_vector();
  };

  Matrix<Complex> a(rows, cols);
  for (std::size_t j = 0; j < basis_a.size(); ++j) {
    const auto col = shifted_column(basis_a[j], F);
    for (int i = 0; i < rows; ++i) a(i, static_cast<int>(j)) = col[i];
  }
  for (std::size_t j = 0; j < basis_b.size(); ++j) {
    const auto col = shifted_column(basis_b[j], G);
    for (int i = 0; i < rows; ++i) a(i, static_cast<int>(basis_a.size() + j)) = col[i];
  }
  const auto rhs = L.coeff_vector();
  const auto sol = solve(a, std::span<const Complex>(rhs));

  AFBGResult out;
  out.A = HomogeneousPoly<Complex>::from_coeff_vector(
      d, da, std::span<const Complex>(sol.x.data(), basis_a.size()));
  out.B = HomogeneousPoly<Complex>::from_coeff_vector(
      d, db, std::span<const Complex>(sol.x.data() + basis_a.size(), basis_b.size()));

  HomogeneousPoly<Complex> recon = out.A * F + out.B * G;
  recon -= L;
  const double scale = std::max({L.sup_coeff_norm(),
                                 out.A.sup_coeff_norm() * F.sup_coeff_norm(),
                                 out.B.sup_coeff_norm() * G.sup_coeff_norm(), 1e-300});
  out.residual = recon.sup_coeff_norm() / scale;
  if (out.residual > 1e-8) {
    throw std::runtime_error(
        "afbg_decompose: no decomposition within tolerance (L may not vanish on the "
        "intersection)");
  }
  return out;
}

}  // namespace charvar
