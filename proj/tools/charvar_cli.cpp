// SPDX-FileCopyrightText: 2026 charvar contributors
// SPDX-License-Identifier: Apache-2.0
//
// charvar command line tool.  Every subcommand emits one JSON document to
// stdout (or --output) and logs to stderr.  Exit codes: 0 success, 1 check
// failure (a residual or acceptance criterion above tolerance), 2 usage
// error (bad flags, malformed input, unknown preset, out-of-domain data).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "charvar/curves.hpp"
#include "charvar/dixon.hpp"
#include "charvar/incidence.hpp"
#include "charvar/integral_rep.hpp"
#include "charvar/json_io.hpp"
#include "charvar/kernel.hpp"
#include "charvar/minitwistor.hpp"
#include "charvar/power_basis.hpp"
#include "charvar/selftest.hpp"

namespace {

using charvar::Complex;
using charvar::GaussianRational;
using charvar::HomogeneousPoly;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

double fin(double v) {
  if (!std::isfinite(v)) throw std::runtime_error("non-finite value in output");
  return v;
}

json cx(const Complex& z) { return json::array({fin(z.real()), fin(z.imag())}); }

json point_json(const std::vector<Complex>& p) {
  json a = json::array();
  for (const Complex& z : p) a.push_back(cx(z));
  return a;
}

json poly_json(const HomogeneousPoly<Complex>& p) {
  return json::parse(charvar::poly_to_json(p));
}

json poly_json(const HomogeneousPoly<GaussianRational>& p) {
  return json::parse(charvar::poly_to_json(p));
}

// ---------------------------------------------------------------------------
// Run configuration: seed, nodes, tolerances, output target.

struct RunConfig {
  unsigned long long seed = charvar::kDefaultSeed;
  std::optional<int> nodes;
  std::optional<std::string> output;
  json tolerances = json::object();

  double tolerance(const std::string& name, double fallback) const {
    if (tolerances.contains(name) && tolerances[name].is_number()) {
      return tolerances[name].get<double>();
    }
    return fallback;
  }
};

void emit(const RunConfig& cfg, const json& doc) {
  if (cfg.output) {
    std::ofstream out(*cfg.output);
    if (!out) throw std::runtime_error("cannot open output file: " + *cfg.output);
    out << doc.dump() << "\n";
  } else {
    std::cout << doc.dump() << "\n";
  }
}

// ---------------------------------------------------------------------------
// Input parsing helpers.

json parse_json_arg(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument("malformed JSON for " + what + ": " + e.what());
  }
}

charvar::Profile parse_profile(const std::string& text) {
  const json j = parse_json_arg(text, "--profile");
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw std::invalid_argument("profile JSON needs a string \"kind\"");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "poly_in_w") {
    if (!j.contains("coeffs") || !j["coeffs"].is_array()) {
      throw std::invalid_argument("poly_in_w profile needs a \"coeffs\" array");
    }
    std::vector<Complex> coeffs;
    for (const json& c : j["coeffs"]) {
      if (c.is_number()) {
        coeffs.emplace_back(c.get<double>(), 0.0);
      } else if (c.is_array() && c.size() == 2 && c[0].is_number() && c[1].is_number()) {
        coeffs.emplace_back(c[0].get<double>(), c[1].get<double>());
      } else {
        throw std::invalid_argument("profile coefficients must be numbers or [re, im]");
      }
    }
    return charvar::Profile::poly(std::move(coeffs));
  }
  if (kind == "monomial") {
    if (!j.contains("m") || !j["m"].is_number_integer()) {
      throw std::invalid_argument("monomial profile needs an integer \"m\"");
    }
    return charvar::Profile::monomial(j["m"].get<int>());
  }
  throw std::invalid_argument("unsupported profile kind \"" + kind +
                              "\" (supported: poly_in_w, monomial)");
}

// A point coordinate: number, [re, im] numbers, "p/q" string, or
// ["p/q", "r/s"] strings.  Exact when every coordinate is string-based.
bool coordinate_is_exact(const json& c) {
  if (c.is_string()) return true;
  return c.is_array() && c.size() == 2 && c[0].is_string() && c[1].is_string();
}

GaussianRational coordinate_exact(const json& c) {
  if (c.is_string()) return GaussianRational(charvar::parse_rational(c.get<std::string>()));
  return {charvar::parse_rational(c[0].get<std::string>()),
          charvar::parse_rational(c[1].get<std::string>())};
}

Complex coordinate_float(const json& c) {
  if (c.is_number()) return {c.get<double>(), 0.0};
  if (c.is_array() && c.size() == 2 && c[0].is_number() && c[1].is_number()) {
    return {c[0].get<double>(), c[1].get<double>()};
  }
  if (coordinate_is_exact(c)) return coordinate_exact(c).to_complex();
  throw std::invalid_argument("point coordinates must be numbers, [re, im], or rational strings");
}

template <class K, class F>
std::vector<std::vector<K>> parse_points(const json& j, const F& coord) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("--points must be a JSON array");
  std::vector<std::vector<K>> pts;
  for (const json& p : j) {
    if (!p.is_array() || p.empty()) {
      throw std::invalid_argument("each point must be a nonempty coordinate array");
    }
    std::vector<K> row;
    for (const json& c : p) row.push_back(coord(c));
    pts.push_back(std::move(row));
  }
  return pts;
}

std::vector<int> parse_int_csv(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument("trailing characters");
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("could not parse \"" + token + "\" as an integer");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subcommand state.

struct Cli {
  RunConfig cfg;

  // dim
  int dim_d = 3, dim_n = 2, dim_m = 2;
  std::string dim_symbol;

  // bott
  int bott_n = 1, bott_k = 0, bott_q = -1;

  // basis
  std::string basis_preset = "laplace";
  int basis_m = 2;

  // serret
  std::string serret_points;
  int serret_r = 2;
  std::string serret_demo;

  // cayley-bacharach
  std::string cb_f1, cb_f2, cb_removed;
  int cb_gamma = 4;
  bool cb_check = false;

  // afbg
  std::string afbg_l, afbg_f, afbg_g;

  // dixon
  double dixon_u = 0.0, dixon_im = 0.0;
  int dixon_order = 64;
  int dixon_series_order = -1;
  bool dixon_eval_given = false;
  bool dixon_check = false;

  // represent
  std::string rep_preset = "laplace";
  std::string rep_profile;
  std::string rep_at;
  int rep_nodes = 64;
  bool rep_check = false;

  // john
  std::string john_at;
  double john_T = 8.0;
  int john_nodes = 200;
  bool john_check = false;

  // chart
  std::string chart_preset, chart_poly, chart_params;
  bool chart_sample = false;

  // selftest
  std::string selftest_fault;
  std::vector<int> selftest_only;
};

int cmd_dim(const Cli& c) {
  HomogeneousPoly<GaussianRational> f(c.dim_d, c.dim_n);
  if (!c.dim_symbol.empty()) {
    f = charvar::exact_poly_from_json(c.dim_symbol);
    if (f.nvars() != c.dim_d || f.degree() != c.dim_n) {
      throw std::invalid_argument("--symbol does not match --d/--n");
    }
  } else {
    std::mt19937_64 rng(c.cfg.seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    do {
      f = HomogeneousPoly<GaussianRational>(c.dim_d, c.dim_n);
      for (const auto& mon : charvar::monomial_basis(c.dim_d, c.dim_n)) {
        GaussianRational z(charvar::BigRational(coeff(rng)), charvar::BigRational(coeff(rng)));
        if (!z.is_zero()) f.set_coeff(mon, z);
      }
    } while (f.is_zero());
    std::cerr << "dim: using a random symbol from seed " << c.cfg.seed << "\n";
  }
  const auto dims = charvar::kernel_dimension_predicted(c.dim_d, c.dim_n, c.dim_m);
  const auto basis = charvar::kernel_basis(f, c.dim_m);
  json doc;
  doc["d"] = c.dim_d;
  doc["n"] = c.dim_n;
  doc["m"] = c.dim_m;
  doc["predicted"] = dims.kernel_dim;
  doc["computed"] = static_cast<long long>(basis.size());
  doc["ambient"] = dims.ambient_dim;
  doc["seed"] = c.cfg.seed;
  doc["symbol"] = poly_json(f);
  emit(c.cfg, doc);
  return basis.size() == static_cast<std::size_t>(dims.kernel_dim) ? kExitOk : kExitCheckFailed;
}

int cmd_bott(const Cli& c) {
  json doc;
  doc["n"] = c.bott_n;
  doc["k"] = c.bott_k;
  if (c.bott_q >= 0) {
    doc["q"] = c.bott_q;
    doc["dimension"] = charvar::bott_dimension(c.bott_n, c.bott_k, c.bott_q);
  } else {
    json dims = json::array();
    long long euler = 0;
    for (int q = 0; q <= c.bott_n; ++q) {
      const long long h = charvar::bott_dimension(c.bott_n, c.bott_k, q);
      dims.push_back(h);
      euler += (q % 2 == 0 ? 1 : -1) * h;
    }
    doc["dimensions"] = dims;
    doc["euler"] = euler;
  }
  emit(c.cfg, doc);
  return kExitOk;
}

int cmd_basis(const Cli& c) {
  const auto chart = charvar::preset_chart(c.basis_preset);
  const auto f = charvar::to_float(charvar::preset_symbol(c.basis_preset));
  const auto pb = charvar::build_power_basis(f, c.basis_m, chart, c.cfg.seed);
  json doc;
  doc["preset"] = c.basis_preset;
  doc["m"] = c.basis_m;
  doc["r"] = pb.r;
  doc["seed"] = pb.seed;
  json pts = json::array();
  for (const auto& p : pb.points) pts.push_back(point_json(p));
  doc["points"] = pts;
  json params = json::array();
  for (const auto& p : pb.params) params.push_back(point_json(p));
  doc["params"] = params;
  json mat = json::array();
  for (const auto& pw : pb.powers) {
    json row = json::array();
    for (const Complex& z : pw.coeff_vector()) row.push_back(cx(z));
    mat.push_back(row);
  }
  doc["coefficient_matrix"] = mat;
  emit(c.cfg, doc);
  return kExitOk;
}

int cmd_serret(const Cli& c) {
  json doc;
  doc["r"] = c.serret_r;
  doc["seed"] = c.cfg.seed;
  const auto report_exact = [&doc](const charvar::SyzygyReport<GaussianRational>& rep) {
    doc["field"] = "exact";
    doc["nullspace_dim"] = rep.nullspace_dim;
    doc["all_coeffs_nonzero"] = rep.all_coeffs_nonzero;
    if (rep.syzygy) {
      json s = json::array();
      for (const auto& z : rep.syzygy.value()) {
        s.push_back(json::array({charvar::format_rational(z.re), charvar::format_rational(z.im)}));
      }
      doc["syzygy"] = s;
    }
  };
  const auto report_float = [&doc](const charvar::SyzygyReport<Complex>& rep) {
    doc["field"] = "float";
    doc["nullspace_dim"] = rep.nullspace_dim;
    doc["all_coeffs_nonzero"] = rep.all_coeffs_nonzero;
    if (rep.syzygy) {
      json s = json::array();
      for (const Complex& z : rep.syzygy.value()) s.push_back(cx(z));
      doc["syzygy"] = s;
    }
  };

  if (!c.serret_demo.empty()) {
    std::mt19937_64 rng(c.cfg.seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<std::vector<GaussianRational>> pts;
    if (c.serret_demo == "conic") {
      std::vector<charvar::BigRational> ts;
      while (ts.size() < 6) {
        charvar::BigRational t(num(rng), den(rng));
        if (std::find(ts.begin(), ts.end(), t) == ts.end()) ts.push_back(t);
      }
      for (const auto& t : ts) {
        pts.push_back({GaussianRational(charvar::BigRational(1)), GaussianRational(t),
                       GaussianRational(t * t)});
      }
    } else if (c.serret_demo == "generic") {
      for (int i = 0; i < 6; ++i) {
        std::vector<GaussianRational> p;
        for (int j = 0; j < 3; ++j) {
          p.emplace_back(charvar::BigRational(num(rng), den(rng)),
                         charvar::BigRational(num(rng), den(rng)));
        }
        pts.push_back(std::move(p));
      }
    } else {
      throw std::invalid_argument("--demo must be \"conic\" or \"generic\"");
    }
    doc["demo"] = c.serret_demo;
    report_exact(charvar::serret_syzygy(pts, c.serret_r, c.cfg.seed));
    emit(c.cfg, doc);
    return kExitOk;
  }

  if (c.serret_points.empty()) {
    throw std::invalid_argument("serret needs --points or --demo");
  }
  const json j = parse_json_arg(c.serret_points, "--points");
  bool exact = true;
  for (const json& p : j) {
    for (const json& coord : p) exact = exact && coordinate_is_exact(coord);
  }
  if (exact) {
    const auto pts = parse_points<GaussianRational>(j, coordinate_exact);
    report_exact(charvar::serret_syzygy(pts, c.serret_r, c.cfg.seed));
  } else {
    const auto pts = parse_points<Complex>(j, coordinate_float);
    report_float(charvar::serret_syzygy(pts, c.serret_r, c.cfg.seed));
  }
  emit(c.cfg, doc);
  return kExitOk;
}

int cmd_cayley_bacharach(const Cli& c) {
  const auto f1 = charvar::float_poly_from_json(c.cb_f1);
  const auto f2 = charvar::float_poly_from_json(c.cb_f2);
  std::optional<std::vector<int>> removed;
  if (!c.cb_removed.empty()) removed = parse_int_csv(c.cb_removed);
  const auto rep = charvar::cayley_bacharach_check(f1, f2, c.cb_gamma, c.cfg.seed, removed);
  json doc;
  doc["m"] = rep.m;
  doc["n"] = rep.n;
  doc["gamma"] = rep.gamma;
  doc["seed"] = rep.seed;
  json pts = json::array();
  for (const auto& p : rep.intersection) pts.push_back(point_json(p));
  doc["intersection"] = pts;
  doc["removed"] = rep.removed;
  doc["curve_count"] = rep.curve_count;
  doc["max_abs_value"] = fin(rep.max_abs_value);
  doc["all_vanish"] = rep.all_vanish;
  doc["exception_fires"] = rep.exception_fires;
  doc["applicable"] = rep.applicable;
  doc["warnings"] = rep.warnings;
  emit(c.cfg, doc);
  if (c.cb_check && !(rep.all_vanish || rep.exception_fires)) return kExitCheckFailed;
  return kExitOk;
}

int cmd_afbg(const Cli& c) {
  const auto l = charvar::float_poly_from_json(c.afbg_l);
  const auto f = charvar::float_poly_from_json(c.afbg_f);
  const auto g = charvar::float_poly_from_json(c.afbg_g);
  json doc;
  try {
    const auto res = charvar::afbg_decompose(l, f, g);
    doc["ok"] = true;
    doc["a"] = poly_json(res.A);
    doc["b"] = poly_json(res.B);
    doc["residual"] = fin(res.residual);
  } catch (const std::runtime_error& e) {
    doc["ok"] = false;
    doc["error"] = e.what();
    emit(c.cfg, doc);
    return kExitCheckFailed;
  }
  emit(c.cfg, doc);
  return kExitOk;
}

int cmd_dixon(const Cli& c) {
  json doc;
  if (c.dixon_series_order >= 0) {
    const auto ser = charvar::dixon_series(c.dixon_series_order);
    doc["order"] = ser.order;
    json s = json::array();
    json cc = json::array();
    for (const auto& v : ser.s) s.push_back(charvar::format_rational(v));
    for (const auto& v : ser.c) cc.push_back(charvar::format_rational(v));
    doc["s"] = s;
    doc["c"] = cc;
    emit(c.cfg, doc);
    return kExitOk;
  }
  if (!c.dixon_eval_given) {
    throw std::invalid_argument("dixon needs --eval or --series");
  }
  const Complex u(c.dixon_u, c.dixon_im);
  const auto v = charvar::dixon_eval(u, c.dixon_order);
  doc["u"] = cx(u);
  doc["order"] = c.dixon_order;
  doc["s"] = cx(v.s);
  doc["c"] = cx(v.c);
  doc["cubic_residual"] = fin(v.cubic_residual);
  emit(c.cfg, doc);
  const double tol = c.cfg.tolerance("dixon", 1e-12);
  if (c.dixon_check && v.cubic_residual > tol) return kExitCheckFailed;
  return kExitOk;
}

int cmd_represent(const Cli& c) {
  if (c.rep_profile.empty() || c.rep_at.empty()) {
    throw std::invalid_argument("represent needs --profile and --at");
  }
  const auto chart = charvar::preset_chart(c.rep_preset);
  const auto profile = parse_profile(c.rep_profile);
  const auto at = charvar::parse_real_csv(c.rep_at);
  const int nodes = c.cfg.nodes.value_or(c.rep_nodes);
  std::vector<Complex> x;
  x.reserve(at.size());
  for (double v : at) x.emplace_back(v, 0.0);
  const Complex value = charvar::represent(chart, profile, chart.default_rule(nodes), x);
  json doc;
  doc["preset"] = c.rep_preset;
  doc["at"] = at;
  doc["nodes"] = nodes;
  doc["value"] = cx(value);
  int code = kExitOk;
  if (c.rep_check) {
    const auto v = charvar::representation(chart, profile, chart.default_rule(nodes));
    const auto rep = charvar::pde_residual(chart.symbol, v, {at});
    doc["residual"] = fin(rep.max_abs_residual);
    doc["residual_method"] = rep.method;
    const double tol = c.cfg.tolerance("represent", 1e-8);
    doc["tolerance"] = tol;
    if (rep.max_abs_residual > tol) code = kExitCheckFailed;
  }
  emit(c.cfg, doc);
  return code;
}

int cmd_john(const Cli& c) {
  if (c.john_at.empty()) throw std::invalid_argument("john needs --at s,x,y,z");
  const auto at = charvar::parse_real_csv(c.john_at);
  if (at.size() != 4) throw std::invalid_argument("--at needs exactly 4 coordinates (s,x,y,z)");
  const auto f = [](double x, double y, double z) {
    return Complex(std::exp(-(x * x + y * y + z * z)), 0.0);
  };
  const int nodes = c.cfg.nodes.value_or(c.john_nodes);
  const auto got = charvar::john_transform(f, at[0], at[1], at[2], at[3], c.john_T, nodes);
  const double a = 1.0 + at[2] * at[2] + at[3] * at[3];
  const double b = at[0] * at[2] + at[1] * at[3];
  const double cc = at[0] * at[0] + at[1] * at[1];
  const double closed = std::sqrt(std::numbers::pi / a) * std::exp(b * b / a - cc);
  const double err = std::abs(got.value - Complex(closed, 0.0));
  json doc;
  doc["at"] = at;
  doc["T"] = c.john_T;
  doc["nodes"] = nodes;
  doc["integrand"] = "exp(-|p|^2)";
  doc["value"] = cx(got.value);
  doc["closed_form"] = fin(closed);
  doc["abs_error"] = fin(err);
  doc["warnings"] = got.warnings;
  emit(c.cfg, doc);
  const double tol = c.cfg.tolerance("john", 1e-10);
  if (c.john_check && err > tol) return kExitCheckFailed;
  return kExitOk;
}

int cmd_chart(const Cli& c) {
  if (c.chart_preset.empty() == c.chart_poly.empty()) {
    throw std::invalid_argument("chart needs exactly one of --preset or --poly");
  }
  const charvar::CurveChart chart =
      !c.chart_preset.empty()
          ? charvar::preset_chart(c.chart_preset)
          : charvar::generic_plane_chart(charvar::float_poly_from_json(c.chart_poly));
  json doc;
  doc["name"] = chart.name;
  doc["ambient_vars"] = chart.ambient_vars;
  doc["param_count"] = chart.param_count;
  doc["domain"] = chart.domain_description;
  std::vector<Complex> params;
  if (c.chart_sample) {
    std::mt19937_64 rng(c.cfg.seed);
    params = chart.sample(rng);
    doc["seed"] = c.cfg.seed;
  } else if (!c.chart_params.empty()) {
    const auto path = charvar::parse_real_csv(c.chart_params);
    if (static_cast<int>(path.size()) != chart.param_count) {
      throw std::invalid_argument("--params needs " + std::to_string(chart.param_count) +
                                  " real path coordinates for this chart");
    }
    params = chart.path_param(path);
  } else {
    throw std::invalid_argument("chart needs --params or --sample");
  }
  if (!chart.in_domain(params)) {
    throw std::domain_error("requested parameters are outside the chart domain");
  }
  doc["params"] = point_json(params);
  doc["point"] = point_json(chart.map(params));
  doc["residual"] = fin(charvar::chart_residual(chart, params));
  emit(c.cfg, doc);
  return kExitOk;
}

int cmd_selftest(const Cli& c) {
  charvar::SelfTestOptions opt;
  opt.seed = c.cfg.seed;
  opt.only = c.selftest_only;
  if (!c.selftest_fault.empty()) {
    if (c.selftest_fault != "dixon") {
      throw std::invalid_argument("--fault supports only \"dixon\"");
    }
    opt.inject_dixon_fault = true;
    std::cerr << "selftest: injecting a deliberate Dixon series fault\n";
  }
  const auto results = charvar::run_acceptance_suite(opt);
  json arr = json::array();
  for (const auto& r : results) {
    std::cerr << (r.passed ? "[PASS] " : "[FAIL] ") << r.index << " " << r.name << " ("
              << r.seconds << " s) " << r.detail << "\n";
    json e;
    e["index"] = r.index;
    e["name"] = r.name;
    e["passed"] = r.passed;
    e["detail"] = r.detail;
    e["seconds"] = fin(r.seconds);
    arr.push_back(e);
  }
  json doc;
  doc["criteria"] = arr;
  doc["all_passed"] = charvar::all_passed(results);
  doc["seed"] = opt.seed;
  if (opt.inject_dixon_fault) doc["fault"] = "dixon";
  emit(c.cfg, doc);
  return charvar::all_passed(results) ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  Cli c;
  CLI::App app{"charvar: characteristic-variety toolkit"};
  app.require_subcommand(1);

  std::string seed_text;
  std::string config_path;
  std::string output_path;
  auto* seed_opt = app.add_option("--seed", seed_text, "Random seed (default: CHARVAR_SEED env)");
  auto* out_opt = app.add_option("--output", output_path, "Write JSON here instead of stdout");
  app.add_option("--config", config_path, "JSON config file (merged under explicit flags)");

  auto* dim = app.add_subcommand("dim", "Kernel dimension: predicted vs computed");
  dim->add_option("--d", c.dim_d, "Number of variables")->required();
  dim->add_option("--n", c.dim_n, "Symbol degree")->required();
  dim->add_option("--m", c.dim_m, "Kernel degree")->required();
  dim->add_option("--symbol", c.dim_symbol, "Exact symbol JSON (default: seeded random)");

  auto* bott = app.add_subcommand("bott", "Line bundle cohomology dimensions");
  bott->add_option("--n", c.bott_n, "Projective space dimension")->required();
  bott->add_option("--k", c.bott_k, "Twist")->required();
  bott->add_option("--q", c.bott_q, "Cohomology degree (default: all of 0..n)");

  auto* basis = app.add_subcommand("basis", "Power basis of the degree-m kernel");
  basis->add_option("--preset", c.basis_preset, "Chart preset (laplace, wave, fermat)");
  basis->add_option("--m", c.basis_m, "Kernel degree")->required();

  auto* serret = app.add_subcommand("serret", "Syzygy test for powers of point forms");
  serret->add_option("--points", c.serret_points, "JSON array of projective points");
  serret->add_option("--r", c.serret_r, "Power (2 for the conic criterion)");
  serret->add_option("--demo", c.serret_demo, "Generate demo points: conic | generic");

  auto* cb = app.add_subcommand("cayley-bacharach", "Vanishing dichotomy for removed points");
  cb->add_option("--f1", c.cb_f1, "First curve JSON")->required();
  cb->add_option("--f2", c.cb_f2, "Second curve JSON")->required();
  cb->add_option("--gamma", c.cb_gamma, "Dichotomy degree parameter");
  cb->add_option("--removed", c.cb_removed, "Comma list of removed point indices");
  cb->add_flag("--check", c.cb_check, "Exit 1 unless vanishing or the exception holds");

  auto* afbg = app.add_subcommand("afbg", "Decompose L = A F + B G");
  afbg->add_option("--l", c.afbg_l, "Target form JSON")->required();
  afbg->add_option("--f", c.afbg_f, "First generator JSON")->required();
  afbg->add_option("--g", c.afbg_g, "Second generator JSON")->required();

  auto* dixon = app.add_subcommand("dixon", "Dixon elliptic pair: series and evaluation");
  auto* eval_opt = dixon->add_option("--eval", c.dixon_u, "Evaluate at this real part");
  dixon->add_option("--im", c.dixon_im, "Imaginary part for --eval");
  dixon->add_option("--order", c.dixon_order, "Series truncation order");
  dixon->add_option("--series", c.dixon_series_order, "Print exact coefficients 0..N");
  dixon->add_flag("--check", c.dixon_check, "Exit 1 if the cubic identity fails");

  auto* rep = app.add_subcommand("represent", "Integral representation from a chart");
  rep->add_option("--preset", c.rep_preset, "Chart preset (laplace, wave, fermat)");
  rep->add_option("--profile", c.rep_profile, "Profile JSON, e.g. {\"kind\":\"poly_in_w\",...}");
  rep->add_option("--at", c.rep_at, "Evaluation point, comma-separated reals");
  rep->add_option("--nodes", c.rep_nodes, "Quadrature nodes per path dimension");
  rep->add_flag("--check", c.rep_check, "Also verify the PDE residual at the point");

  auto* john = app.add_subcommand("john", "Line-space transform of the standard Gaussian");
  john->add_option("--at", c.john_at, "Line coordinates s,x,y,z");
  john->add_option("--T", c.john_T, "Truncation half-length");
  john->add_option("--nodes", c.john_nodes, "Gauss-Legendre node count");
  john->add_flag("--check", c.john_check, "Exit 1 if the closed form disagrees");

  auto* chart = app.add_subcommand("chart", "Evaluate a chart point and its residual");
  chart->add_option("--preset", c.chart_preset, "Chart preset name");
  chart->add_option("--poly", c.chart_poly, "Plane curve JSON for a generic chart");
  chart->add_option("--params", c.chart_params, "Real path coordinates, comma-separated");
  chart->add_flag("--sample", c.chart_sample, "Use a seeded random in-domain point");

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_option("--fault", c.selftest_fault, "Inject a deliberate fault: dixon");
  selftest->add_option("--only", c.selftest_only, "Run only these criteria")->delimiter(',');

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    // Seed resolution: flag > config > environment > default.
    std::optional<unsigned long long> seed;
    if (seed_opt->count() > 0) {
      try {
        std::size_t used = 0;
        seed = std::stoull(seed_text, &used, 0);
        if (used != seed_text.size()) throw std::invalid_argument("trailing characters");
      } catch (const std::exception&) {
        throw std::invalid_argument("--seed must be an unsigned integer");
      }
    }
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::invalid_argument("cannot read config file: " + config_path);
      std::stringstream buf;
      buf << in.rdbuf();
      const json cfg = parse_json_arg(buf.str(), "--config");
      if (!cfg.is_object()) throw std::invalid_argument("config file must hold a JSON object");
      if (!seed && cfg.contains("seed") && cfg["seed"].is_number_unsigned()) {
        seed = cfg["seed"].get<unsigned long long>();
      }
      if (cfg.contains("nodes") && cfg["nodes"].is_number_integer()) {
        c.cfg.nodes = cfg["nodes"].get<int>();
      }
      if (out_opt->count() == 0 && cfg.contains("output") && cfg["output"].is_string()) {
        c.cfg.output = cfg["output"].get<std::string>();
      }
      if (cfg.contains("tolerances") && cfg["tolerances"].is_object()) {
        c.cfg.tolerances = cfg["tolerances"];
      }
    }
    if (!seed) {
      if (const char* env = std::getenv("CHARVAR_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 0);
        if (end != nullptr && *end == '\0' && end != env) {
          seed = v;
        } else {
          std::cerr << "warning: ignoring malformed CHARVAR_SEED\n";
        }
      }
    }
    c.cfg.seed = seed.value_or(charvar::kDefaultSeed);
    if (out_opt->count() > 0) c.cfg.output = output_path;
    c.dixon_eval_given = eval_opt->count() > 0;

    if (dim->parsed()) return cmd_dim(c);
    if (bott->parsed()) return cmd_bott(c);
    if (basis->parsed()) return cmd_basis(c);
    if (serret->parsed()) return cmd_serret(c);
    if (cb->parsed()) return cmd_cayley_bacharach(c);
    if (afbg->parsed()) return cmd_afbg(c);
    if (dixon->parsed()) return cmd_dixon(c);
    if (rep->parsed()) return cmd_represent(c);
    if (john->parsed()) return cmd_john(c);
    if (chart->parsed()) return cmd_chart(c);
    if (selftest->parsed()) return cmd_selftest(c);
    std::cerr << "error: no subcommand selected\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}
