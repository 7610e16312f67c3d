// SPDX-FileCopyrightText: 2026 charvar contributors
// SPDX-License-Identifier: Apache-2.0
//
// Scalar domains used throughout the library.
//
// All algebra runs over one of two coefficient fields:
//   * GaussianRational: exact complex numbers with arbitrary-precision
//     rational real and imaginary parts (the field Q(i)).  Results in this
//     domain are certain; it is the authority for rank and dimension counts.
//   * Complex: IEEE binary64 complex, used by the numerical routes.

#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <complex>
#include <cstdint>
#include <string>

namespace charvar {

using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;
using Complex = std::complex<double>;

/// Parse a rational from "p/q" or "p" (decimal, optional sign).
/// Throws std::invalid_argument on malformed input or zero denominator.
BigRational parse_rational(const std::string& text);

/// Canonical form "p/q" with q > 0 and gcd(p, q) = 1; integers print as "p/1"
/// so that serialized output round-trips byte-identically.
std::string format_rational(const BigRational& value);

/// Exact complex scalar: an element of Q(i).
struct GaussianRational {
  BigRational re{0};
  BigRational im{0};

  GaussianRational() = default;
  GaussianRational(long long r) : re(r) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(BigRational r) : re(std::move(r)) {}  // NOLINT
  GaussianRational(BigRational r, BigRational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long long r, long long i) : re(r), im(i) {}

  static GaussianRational i() { return {BigRational(0), BigRational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, -im}; }

  /// |z|^2 = re^2 + im^2, an exact nonnegative rational.
  BigRational norm_sq() const { return re * re + im * im; }

  Complex to_complex() const {
    return {re.convert_to<double>(), im.convert_to<double>()};
  }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    BigRational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

/// Human-readable form, e.g. "3/2+1/4i"; used in error messages and logs.
std::string to_string(const GaussianRational& z);

// Small traits so templated code can treat both scalar domains uniformly.
template <class K>
struct ScalarTraits;

template <>
struct ScalarTraits<GaussianRational> {
  static constexpr bool is_exact = true;
  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return {1}; }
  static GaussianRational from_int(long long v) { return {v}; }
  static bool is_zero(const GaussianRational& v) { return v.is_zero(); }
  static Complex to_complex(const GaussianRational& v) { return v.to_complex(); }
  /// Magnitude surrogate for pruning and pivoting decisions (|re| + |im|).
  static double magnitude(const GaussianRational& v) {
    return std::abs(v.re.convert_to<double>()) + std::abs(v.im.convert_to<double>());
  }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool is_exact = false;
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex from_int(long long v) { return {static_cast<double>(v), 0.0}; }
  static bool is_zero(const Complex& v) { return v.real() == 0.0 && v.imag() == 0.0; }
  static Complex to_complex(const Complex& v) { return v; }
  static double magnitude(const Complex& v) { return std::abs(v); }
};

}  // namespace charvar
