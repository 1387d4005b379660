#include <benchmark/benchmark.h>

#include "test_util.hpp"
#include "unideal/applications.hpp"
#include "unideal/hadamard.hpp"
#include "unideal/ideal.hpp"
#include "unideal/lowrank.hpp"

namespace {

using namespace unideal;

const Field kQ;

/// Remainder evaluation with r = 2 forms, outer degree 3, growing n.
void BM_RemEvalByVars(benchmark::State& state) {
  Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const LowRankInput input = testing::random_lowrank(kQ, n, 2, 3, rng);
  const UnivariateIdeal ideal = testing::random_full_ideal(kQ, n, rng, 3);
  const auto alpha = testing::random_point(kQ, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rem_eval(input, ideal, alpha));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RemEvalByVars)->RangeMultiplier(2)->Range(10, 160)->Complexity()->Unit(benchmark::kMillisecond);

/// Remainder evaluation with n = 12, r = 2, growing outer degree.
void BM_RemEvalByDegree(benchmark::State& state) {
  Rng rng(2);
  const auto d = static_cast<unsigned>(state.range(0));
  const LowRankInput input = testing::random_lowrank(kQ, 12, 2, d, rng);
  const UnivariateIdeal ideal = testing::random_full_ideal(kQ, 12, rng, 3);
  const auto alpha = testing::random_point(kQ, 12, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rem_eval(input, ideal, alpha));
}
BENCHMARK(BM_RemEvalByDegree)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

/// Expand-and-divide baseline on the same shape as BM_RemEvalByVars.
void BM_ExpandAndDivide(benchmark::State& state) {
  Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const LowRankInput input = testing::random_lowrank(kQ, n, 2, 3, rng);
  const UnivariateIdeal ideal = testing::random_full_ideal(kQ, n, rng, 3);
  const auto alpha = testing::random_point(kQ, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(divide(expand(compose(input)), ideal).eval(alpha));
}
BENCHMARK(BM_ExpandAndDivide)->RangeMultiplier(2)->Range(10, 40)->Unit(benchmark::kMillisecond);

Matrix rank_two(std::size_t n, Rng& rng) {
  Matrix a(n, n, kQ);
  for (int s = 0; s < 2; ++s) {
    const auto u = testing::random_point(kQ, n, rng, -3, 3), v = testing::random_point(kQ, n, rng, -3, 3);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) += u[i] * v[j];
  }
  return a;
}

void BM_PermanentLowRank(benchmark::State& state) {
  Rng rng(3);
  const Matrix a = rank_two(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(permanent_lowrank(a));
}
BENCHMARK(BM_PermanentLowRank)->DenseRange(4, 16, 4)->Unit(benchmark::kMillisecond);

void BM_PermanentRyser(benchmark::State& state) {
  Rng rng(3);
  const Matrix a = rank_two(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(ryser_permanent(a));
}
BENCHMARK(BM_PermanentRyser)->DenseRange(4, 16, 4)->Unit(benchmark::kMillisecond);

/// K_{a,a} has adjacency rank 2 and minimum cover a; ask for exactly a.
void BM_VertexCoverBipartite(benchmark::State& state) {
  const auto a = static_cast<std::size_t>(state.range(0));
  const Graph g = Graph::complete_bipartite(a, a);
  Rng rng(4);
  for (auto _ : state) benchmark::DoNotOptimize(vertex_cover_lowrank(g, a, 1, rng).has_cover);
}
BENCHMARK(BM_VertexCoverBipartite)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

/// Power-ideal membership for a degree-k circuit on 6 variables, one colouring per degree.
void BM_MembershipPowers(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  Rng rng(5);
  const Circuit c = testing::random_circuit(kQ, 6, k, rng);
  const PowerIdealSpec spec{std::vector<unsigned>(6, 2), k};
  PowersOptions options;
  options.trials = 1;
  for (auto _ : state) benchmark::DoNotOptimize(membership_powers(c, spec, rng, options).not_member);
}
BENCHMARK(BM_MembershipPowers)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
