#include <benchmark/benchmark.h>

#include "balident/egf.hpp"
#include "balident/identities.hpp"
#include "balident/sequences.hpp"

using namespace balident;

namespace {

static void BM_BernoulliNumbers(benchmark::State& state) {
  for (auto _ : state) {
    SequenceCache cache;
    benchmark::DoNotOptimize(cache.bernoulli_number(static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_BernoulliNumbers)->Arg(30)->Arg(60)->Arg(100);

static void BM_BalancingPoly(benchmark::State& state) {
  for (auto _ : state) {
    SequenceCache cache;
    benchmark::DoNotOptimize(cache.balancing_poly(static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_BalancingPoly)->Arg(30)->Arg(60);

static void BM_PolyMul(benchmark::State& state) {
  SequenceCache cache;
  const Poly<Rational>& a = cache.balancing_poly(static_cast<std::size_t>(state.range(0)));
  const Poly<Rational>& b = cache.lucas_balancing_poly(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMul)->Arg(20)->Arg(40)->Arg(60);

static void BM_SeriesMulExt(benchmark::State& state) {
  const std::size_t order = static_cast<std::size_t>(state.range(0));
  auto even = egf::balancing_even(order);
  SequenceCache cache;
  SqrtExt scale(Poly<Rational>::zero(), Poly<Rational>::monomial(Rational(12), 1));
  auto bern = egf::bernoulli_series(egf::BernoulliArg::Zero, scale, order, cache);
  for (auto _ : state)
    benchmark::DoNotOptimize(even * bern);
}
BENCHMARK(BM_SeriesMulExt)->Arg(10)->Arg(25);

static void BM_VerifyThm1Direct(benchmark::State& state) {
  VerifyContext ctx(10);
  Params p;
  p["n"] = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify("thm1", p, ctx));
}
BENCHMARK(BM_VerifyThm1Direct)->Arg(10)->Arg(20)->Arg(30);

static void BM_VerifyCor9Grid(benchmark::State& state) {
  GridLimits limits;
  limits.n_max = state.range(0);
  limits.j_max = 3;
  limits.big_n_max = 5;
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_grid("cor9-a", limits, Mode::Direct, 1, 10));
}
BENCHMARK(BM_VerifyCor9Grid)->Arg(10)->Arg(20);

} // namespace

BENCHMARK_MAIN();
