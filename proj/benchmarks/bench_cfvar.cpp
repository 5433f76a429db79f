#include "cfvar/catalog.hpp"
#include "cfvar/energy.hpp"
#include "cfvar/isopara_algebra.hpp"
#include "cfvar/jet_calculus.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace cfvar;

static void BM_ChartGeometry(benchmark::State& state) {
  const ChartedMap map = clifford_torus(0.6, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ChartGeometry(map));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(map.grid().size()));
}
BENCHMARK(BM_ChartGeometry)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_CovariantJets(benchmark::State& state) {
  const ChartGeometry geo(clifford_torus(0.6, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(covariant_jets(geo));
}
BENCHMARK(BM_CovariantJets)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_Residuals(benchmark::State& state) {
  const ChartGeometry geo(rotation_torus(2.0, 0.7, static_cast<int>(state.range(0)), 0.1));
  const CovariantJets jets = covariant_jets(geo);
  for (auto _ : state) benchmark::DoNotOptimize(residuals(geo, jets));
}
BENCHMARK(BM_Residuals)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_OracleEquivalence(benchmark::State& state) {
  const ChartGeometry geo(hyperbolic_torus(0.8, 1.3, static_cast<int>(state.range(0))));
  const CovariantJets jets = covariant_jets(geo);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_equivalence(geo, jets));
}
BENCHMARK(BM_OracleEquivalence)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_Energy(benchmark::State& state) {
  const ChartedMap map = clifford_torus(std::sqrt(0.5), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(integrate_invariants(map));
}
BENCHMARK(BM_Energy)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_FormInvariants(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<Eigen::MatrixXd> slices;
  for (int a = 0; a < 3; ++a) {
    Eigen::MatrixXd s(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j <= i; ++j) s(i, j) = s(j, i) = u(rng);
    slices.push_back(s);
  }
  const FormCoefficients h(Signature(m, 0), Signature(3, 0), slices);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_q1(h));
    benchmark::DoNotOptimize(eval_q2(h));
  }
}
BENCHMARK(BM_FormInvariants)->Arg(2)->Arg(4)->Arg(8);

static void BM_ConditionPolynomial(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(condition_polynomial(4, {4, 4 * m - 5, 4, 4 * m - 5}, ConditionKind::CF));
}
BENCHMARK(BM_ConditionPolynomial)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_RootIsolation(benchmark::State& state) {
  const ConditionPolynomial cp = condition_polynomial(4, {9, 6, 9, 6}, ConditionKind::CF);
  for (auto _ : state) benchmark::DoNotOptimize(isolate_positive_roots(cp, family_lambda_range(4)));
}
BENCHMARK(BM_RootIsolation)->Unit(benchmark::kMillisecond);

static void BM_ClassificationSuite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classification_suite());
}
BENCHMARK(BM_ClassificationSuite)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
