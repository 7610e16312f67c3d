// SPDX-FileCopyrightText: 2026 charvar contributors
// SPDX-License-Identifier: Apache-2.0
//
// Benchmarks for the hot paths: exact kernel bases, power-basis assembly,
// series evaluation, root finding, curve intersection, and the two integral
// transforms.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "charvar/curves.hpp"
#include "charvar/dixon.hpp"
#include "charvar/integral_rep.hpp"
#include "charvar/kernel.hpp"
#include "charvar/minitwistor.hpp"
#include "charvar/power_basis.hpp"

namespace {

using charvar::Complex;
using charvar::GaussianRational;
using charvar::HomogeneousPoly;

HomogeneousPoly<GaussianRational> laplace_exact() {
  HomogeneousPoly<GaussianRational> f(3, 2);
  f.set_coeff({2, 0, 0}, {1});
  f.set_coeff({0, 2, 0}, {1});
  f.set_coeff({0, 0, 2}, {1});
  return f;
}

HomogeneousPoly<Complex> laplace_float() {
  HomogeneousPoly<Complex> f(3, 2);
  f.set_coeff({2, 0, 0}, Complex(1, 0));
  f.set_coeff({0, 2, 0}, Complex(1, 0));
  f.set_coeff({0, 0, 2}, Complex(1, 0));
  return f;
}

void BM_KernelBasis(benchmark::State& state) {
  const auto f = laplace_exact();
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(charvar::kernel_basis(f, m));
  }
}
BENCHMARK(BM_KernelBasis)->Arg(3)->Arg(4)->Arg(6);

void BM_BuildPowerBasis(benchmark::State& state) {
  const auto f = laplace_float();
  const auto chart = charvar::preset_chart("laplace");
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(charvar::build_power_basis(f, m, chart));
  }
}
BENCHMARK(BM_BuildPowerBasis)->Arg(2)->Arg(3);

void BM_DixonEval(benchmark::State& state) {
  const Complex u(0.7, 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(charvar::dixon_eval(u, 64));
  }
}
BENCHMARK(BM_DixonEval);

void BM_RootsUnivariate(benchmark::State& state) {
  // Degree-12 polynomial with well-spread roots.
  std::mt19937_64 rng(charvar::kDefaultSeed);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<Complex> coeffs(13);
  for (auto& c : coeffs) c = Complex(d(rng), d(rng));
  coeffs.back() += Complex(2.0, 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(charvar::roots_univariate(coeffs));
  }
}
BENCHMARK(BM_RootsUnivariate);

void BM_IntersectCubics(benchmark::State& state) {
  std::mt19937_64 rng(charvar::kDefaultSeed);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  HomogeneousPoly<Complex> f1(3, 3), f2(3, 3);
  for (const auto& mono : charvar::monomial_basis(3, 3)) {
    f1.set_coeff(mono, Complex(d(rng), d(rng)));
    f2.set_coeff(mono, Complex(d(rng), d(rng)));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(charvar::intersect_plane_curves(f1, f2));
  }
}
BENCHMARK(BM_IntersectCubics);

void BM_RepresentLaplace(benchmark::State& state) {
  const auto chart = charvar::preset_chart("laplace");
  const auto profile = charvar::Profile::monomial(4);
  const auto rule = chart.default_rule(64);
  const std::vector<Complex> x = {Complex(0.3, 0), Complex(-0.2, 0), Complex(0.5, 0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(charvar::represent(chart, profile, rule, x));
  }
}
BENCHMARK(BM_RepresentLaplace);

void BM_JohnTransform(benchmark::State& state) {
  const auto gaussian = [](double a, double b, double c) {
    return Complex(std::exp(-(a * a + b * b + c * c)), 0.0);
  };
  for (auto _ : state) {
    benchmark::DoNotOptimize(charvar::john_transform(gaussian, 0.1, -0.2, 0.3, 0.4));
  }
}
BENCHMARK(BM_JohnTransform);

}  // namespace

BENCHMARK_MAIN();
