#include <benchmark/benchmark.h>

#include <random>

#include "takiff/invariants.hpp"
#include "takiff/kostant.hpp"
#include "takiff/sampling.hpp"
#include "takiff/series_ode.hpp"
#include "takiff/toda.hpp"

using namespace takiff;

namespace {

const LieAlgebraData& data_sl3() {
  static LieAlgebraData d = chevalley_basis_sl(2);
  return d;
}

}  // namespace

static void BracketRational(benchmark::State& state) {
  const auto& d = data_sl3();
  std::mt19937_64 rng(1);
  auto x = random_full_element(d, 2, rng);
  auto y = random_full_element(d, 2, rng);
  for (auto _ : state) {
    auto b = bracket(d, x, y);
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BracketRational);

static void BracketDouble(benchmark::State& state) {
  const auto& d = data_sl3();
  std::mt19937_64 rng(1);
  auto x = to_double_element(random_full_element(d, 2, rng));
  auto y = to_double_element(random_full_element(d, 2, rng));
  for (auto _ : state) {
    auto b = bracket(d, x, y);
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BracketDouble);

static void GroupApply(benchmark::State& state) {
  const auto& d = data_sl3();
  std::mt19937_64 rng(2);
  NilpotentGroupElement<Rational> a(d, random_nilpotent_log(d, 2, rng));
  auto x = random_full_element(d, 2, rng);
  for (auto _ : state) {
    auto y = group_apply(d, a, x);
    benchmark::DoNotOptimize(y);
  }
}
BENCHMARK(GroupApply);

static void EvaluateInvariantDouble(benchmark::State& state) {
  const auto& d = data_sl3();
  std::mt19937_64 rng(3);
  auto y = to_double_element(random_full_element(d, 2, rng));
  InvariantSpec spec{3, 2 * 2};  // z-degree 0 coefficient of tr(M^3)
  for (auto _ : state) {
    double v = evaluate_invariant(d, spec, y);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(EvaluateInvariantDouble);

static void ReduceToSection(benchmark::State& state) {
  const auto& d = data_sl3();
  const int l = 2;
  std::mt19937_64 rng(4);
  auto ssf = principal_f<Rational>(d, l);
  SectionBasis sb = graded_complement(d, l, ssf);
  TakiffElement<Rational> s(d.n, l);
  for (const auto& v : sb.section) s += v * random_small_rational(rng);
  NilpotentGroupElement<Rational> a(d, random_nilpotent_log(d, l, rng));
  auto y = group_apply(d, a, ssf + s);
  for (auto _ : state) {
    Reduction r = reduce_to_section(d, ssf, sb, y);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(ReduceToSection);

static void LaxTrajectoryStep(benchmark::State& state) {
  const auto& d = data_sl3();
  std::mt19937_64 rng(5);
  TodaState s0 = random_long_lived_state(2, 2, rng);
  IntegrateOptions opt;
  opt.dt = 1e-2;
  opt.record_invariants = false;
  for (auto _ : state) {
    Trajectory tr = integrate(d, d.cartan, Formulation::lax, s0, 0.1, opt);
    benchmark::DoNotOptimize(tr);
  }
}
BENCHMARK(LaxTrajectoryStep);

static void SeriesCoefficients200(benchmark::State& state) {
  for (auto _ : state) {
    SeriesSolution s = series_coefficients(0.9, -0.8, 0.7, 0.5, 200);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(SeriesCoefficients200);

BENCHMARK_MAIN();
