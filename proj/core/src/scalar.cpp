// SPDX-FileCopyrightText: 2026 charvar contributors
// SPDX-License-Identifier: Apache-2.0

#include "charvar/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace charvar {

namespace {

bool is_decimal_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t k = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (k == s.size()) return false;
  for (; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  return true;
}

}  // namespace

BigRational parse_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  const std::string num_text = text.substr(0, slash);
  if (!is_decimal_integer(num_text)) {
    throw std::invalid_argument("parse_rational: malformed numerator in '" + text + "'");
  }
  BigInt num(num_text);
  if (slash == std::string::npos) {
    return BigRational(num);
  }
  const std::string den_text = text.substr(slash + 1);
  if (!is_decimal_integer(den_text)) {
    throw std::invalid_argument("parse_rational: malformed denominator in '" + text + "'");
  }
  BigInt den(den_text);
  if (den == 0) {
    throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
  }
  // Division canonicalizes: lowest terms, positive denominator.
  return BigRational(num) / BigRational(den);
}

std::string format_rational(const BigRational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) {
    throw std::invalid_argument("GaussianRational: division by zero");
  }
  const BigRational n = o.norm_sq();
  // a / b = a * conj(b) / |b|^2
  BigRational r = (re * o.re + im * o.im) / n;
  im = (im * o.re - re * o.im) / n;
  re = std::move(r);
  return *this;
}

std::string to_string(const GaussianRational& z) {
  std::string out = format_rational(z.re);
  if (z.im >= 0) {
    out += "+";
  }
  out += format_rational(z.im) + "i";
  return out;
}

}  // namespace charvar
