// SPDX-FileCopyrightText: 2026 charvar contributors
// SPDX-License-Identifier: Apache-2.0
//
// JSON serialization of polynomials and points.  The schema is
//   { "nvars": d, "degree": n, "field": "exact" | "float",
//     "terms": [ { "exps": [..], "re": "p/q", "im": "p/q" }        (exact)
//              | { "exps": [..], "re_f": x, "im_f": y } ] }        (float)
// with graded-lexicographic term order and sorted keys on output, so equal
// polynomials serialize byte-identically.  The boundary is std::string to
// keep third-party JSON types out of the installed interface.

#pragma once

#include <string>
#include <vector>

#include "charvar/homogeneous.hpp"

namespace charvar {

std::string poly_to_json(const HomogeneousPoly<GaussianRational>& p);
std::string poly_to_json(const HomogeneousPoly<Complex>& p);

/// Parse an exact polynomial; rejects float-field documents, monomials of
/// the wrong length or degree (non-homogeneous input), and malformed
/// rationals, all as std::invalid_argument.
HomogeneousPoly<GaussianRational> exact_poly_from_json(const std::string& text);

/// Parse a polynomial into the floating domain; accepts both field kinds
/// (exact coefficients are converted).
HomogeneousPoly<Complex> float_poly_from_json(const std::string& text);

/// "[re, im]" — the serialized form of one complex number.
std::string complex_to_json(const Complex& z);

/// JSON array of [re, im] pairs.
std::string point_to_json(const std::vector<Complex>& p);

/// Parse "a,b,c" (comma-separated reals) into a vector; used by CLI --at.
std::vector<double> parse_real_csv(const std::string& text);

}  // namespace charvar
