#include <benchmark/benchmark.h>

#include "instances.hpp"
#include "pathloc/localization.hpp"
#include "pathloc/oracle.hpp"
#include "pathloc/properties.hpp"

using namespace pathloc;
using namespace pathloc::testing;

namespace {

CoalgebraPtr chain(std::size_t n) {
  Shape s{n, std::vector<std::uint8_t>(n * n, 0)};
  for (std::size_t i = 0; i + 1 < n; ++i) s.mult[(i + 1) * n + i] = 1;
  return share(PathCoalgebra::full(build(s)));
}

CoalgebraPtr random_truncated(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto q = build(random_shape(rng, n, 0.4, 2, false));
  return share(PathCoalgebra::finite(q, random_truncation(*q, rng)));
}

void BM_SectionOnChain(benchmark::State& state) {
  const auto c = chain(static_cast<std::size_t>(state.range(0)));
  const LocalizationContext ctx(c, {vertex_at(0)});
  for (auto _ : state) benchmark::DoNotOptimize(section_on_simple(ctx, vertex_at(0)));
}
BENCHMARK(BM_SectionOnChain)->RangeMultiplier(2)->Range(4, 64);

void BM_SocleSeriesOfInjective(benchmark::State& state) {
  const auto c = chain(static_cast<std::size_t>(state.range(0)));
  const PathComodule e = injective(c, vertex_at(0));
  for (auto _ : state) benchmark::DoNotOptimize(socle_series(e));
}
BENCHMARK(BM_SocleSeriesOfInjective)->RangeMultiplier(2)->Range(4, 64);

void BM_QuotientOfEveryInjective(benchmark::State& state) {
  const auto c = random_truncated(6, 42);
  const LocalizationContext ctx(c, {vertex_at(0), vertex_at(2), vertex_at(4)});
  for (auto _ : state) {
    for (VertexId v : c->quiver().vertices()) benchmark::DoNotOptimize(quotient_T(ctx, injective(c, v)));
  }
}
BENCHMARK(BM_QuotientOfEveryInjective);

void BM_Batteries(benchmark::State& state) {
  const auto c = random_truncated(5, 7);
  const CoalgebraFacts facts = coalgebra_facts(c);
  for (auto _ : state) {
    for (std::uint32_t mask = 1; mask < 32; ++mask) {
      const LocalizationContext ctx(c, subset(mask, 5));
      benchmark::DoNotOptimize(is_central(ctx, &facts));
    }
  }
}
BENCHMARK(BM_Batteries);

void BM_OracleHom(benchmark::State& state) {
  const auto c = chain(static_cast<std::size_t>(state.range(0)));
  const LinearComodule a = realize(injective(c, vertex_at(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hom_dim(a, a));
}
BENCHMARK(BM_OracleHom)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
