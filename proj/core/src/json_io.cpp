// SPDX-FileCopyrightText: 2026 charvar contributors
// SPDX-License-Identifier: Apache-2.0

#include "charvar/json_io.hpp"

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace charvar {

namespace {

using nlohmann::json;

json term_exps(const std::vector<int>& exps) {
  json a = json::array();
  for (int e : exps) a.push_back(e);
  return a;
}

template <class K>
json poly_header(const HomogeneousPoly<K>& p, const char* field) {
  json j;
  j["nvars"] = p.nvars();
  j["degree"] = p.degree();
  j["field"] = field;
  j["terms"] = json::array();
  return j;
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
}

// Shared structural validation: returns (nvars, degree, terms array).
std::pair<std::pair<int, int>, json> poly_frame(const json& j,
                                                const char* want_field) {
  if (!j.is_object()) throw std::invalid_argument("polynomial JSON must be an object");
  for (const char* key : {"nvars", "degree", "terms"}) {
    if (!j.contains(key)) {
      throw std::invalid_argument(std::string("polynomial JSON missing \"") + key + "\"");
    }
  }
  if (!j["nvars"].is_number_integer() || !j["degree"].is_number_integer()) {
    throw std::invalid_argument("\"nvars\" and \"degree\" must be integers");
  }
  const int nvars = j["nvars"].get<int>();
  const int degree = j["degree"].get<int>();
  if (nvars < 1) throw std::invalid_argument("\"nvars\" must be at least 1");
  if (degree < 0) throw std::invalid_argument("\"degree\" must be nonnegative");
  if (j.contains("field")) {
    if (!j["field"].is_string()) throw std::invalid_argument("\"field\" must be a string");
    const std::string f = j["field"].get<std::string>();
    if (f != "exact" && f != "float") {
      throw std::invalid_argument("\"field\" must be \"exact\" or \"float\"");
    }
    if (want_field != nullptr && f != want_field) {
      throw std::invalid_argument("expected an \"" + std::string(want_field) +
                                  "\" polynomial, got \"" + f + "\"");
    }
  }
  if (!j["terms"].is_array()) throw std::invalid_argument("\"terms\" must be an array");
  return {{nvars, degree}, j["terms"]};
}

std::vector<int> term_exponents(const json& term, int nvars, int degree) {
  if (!term.is_object() || !term.contains("exps") || !term["exps"].is_array()) {
    throw std::invalid_argument("each term needs an \"exps\" array");
  }
  const json& ex = term["exps"];
  if (static_cast<int>(ex.size()) != nvars) {
    throw std::invalid_argument("term exponent list length does not match \"nvars\"");
  }
  std::vector<int> exps;
  exps.reserve(ex.size());
  long long total = 0;
  for (const json& e : ex) {
    if (!e.is_number_integer()) throw std::invalid_argument("exponents must be integers");
    const int v = e.get<int>();
    if (v < 0) throw std::invalid_argument("exponents must be nonnegative");
    exps.push_back(v);
    total += v;
  }
  if (total != degree) {
    std::ostringstream os;
    os << "term of degree " << total << " in a polynomial declared homogeneous of degree "
       << degree;
    throw std::invalid_argument(os.str());
  }
  return exps;
}

BigRational rational_field(const json& term, const char* key) {
  if (!term.contains(key)) return BigRational(0);
  if (!term[key].is_string()) {
    throw std::invalid_argument(std::string("\"") + key + "\" must be a rational string \"p/q\"");
  }
  try {
    return parse_rational(term[key].get<std::string>());
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("bad rational in \"") + key + "\": " + e.what());
  }
}

double double_field(const json& term, const char* key) {
  if (!term.contains(key)) return 0.0;
  if (!term[key].is_number()) {
    throw std::invalid_argument(std::string("\"") + key + "\" must be a number");
  }
  return term[key].get<double>();
}

}  // namespace

std::string poly_to_json(const HomogeneousPoly<GaussianRational>& p) {
  json j = poly_header(p, "exact");
  for (const auto& [exps, coeff] : p.terms()) {
    json t;
    t["exps"] = term_exps(exps);
    t["re"] = format_rational(coeff.re);
    t["im"] = format_rational(coeff.im);
    j["terms"].push_back(std::move(t));
  }
  return j.dump();
}

std::string poly_to_json(const HomogeneousPoly<Complex>& p) {
  json j = poly_header(p, "float");
  for (const auto& [exps, coeff] : p.terms()) {
    json t;
    t["exps"] = term_exps(exps);
    t["re_f"] = coeff.real();
    t["im_f"] = coeff.imag();
    j["terms"].push_back(std::move(t));
  }
  return j.dump();
}

HomogeneousPoly<GaussianRational> exact_poly_from_json(const std::string& text) {
  const json j = parse_document(text);
  auto [shape, terms] = poly_frame(j, "exact");
  HomogeneousPoly<GaussianRational> p(shape.first, shape.second);
  for (const json& term : terms) {
    std::vector<int> exps = term_exponents(term, shape.first, shape.second);
    if (term.contains("re_f") || term.contains("im_f")) {
      throw std::invalid_argument("float coefficients in an exact polynomial");
    }
    if (!term.contains("re") && !term.contains("im")) {
      throw std::invalid_argument("term has no coefficient (\"re\"/\"im\")");
    }
    GaussianRational c(rational_field(term, "re"), rational_field(term, "im"));
    p.add_to_coeff(exps, c);
  }
  return p;
}

HomogeneousPoly<Complex> float_poly_from_json(const std::string& text) {
  const json j = parse_document(text);
  auto [shape, terms] = poly_frame(j, nullptr);  // accept either field
  HomogeneousPoly<Complex> p(shape.first, shape.second);
  for (const json& term : terms) {
    std::vector<int> exps = term_exponents(term, shape.first, shape.second);
    Complex c;
    if (term.contains("re") || term.contains("im")) {
      if (term.contains("re_f") || term.contains("im_f")) {
        throw std::invalid_argument("term mixes exact and float coefficient keys");
      }
      GaussianRational g(rational_field(term, "re"), rational_field(term, "im"));
      c = g.to_complex();
    } else if (term.contains("re_f") || term.contains("im_f")) {
      c = Complex(double_field(term, "re_f"), double_field(term, "im_f"));
    } else {
      throw std::invalid_argument("term has no coefficient keys");
    }
    p.add_to_coeff(exps, c);
  }
  return p;
}

std::string complex_to_json(const Complex& z) {
  json j = json::array({z.real(), z.imag()});
  return j.dump();
}

std::string point_to_json(const std::vector<Complex>& p) {
  json j = json::array();
  for (const Complex& z : p) j.push_back(json::array({z.real(), z.imag()}));
  return j.dump();
}

std::vector<double> parse_real_csv(const std::string& text) {
  std::vector<double> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(token, &used);
      while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) {
        ++used;
      }
      if (used != token.size()) throw std::invalid_argument("trailing characters");
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("could not parse \"" + token + "\" as a real number");
    }
  }
  if (out.empty()) throw std::invalid_argument("empty coordinate list");
  return out;
}

}  // namespace charvar
