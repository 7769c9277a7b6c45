#include <benchmark/benchmark.h>

#include "cremona/conjclass.hpp"
#include "cremona/delpezzo.hpp"

using namespace cremona;

namespace {

IndexSet sample_set(const Field& k, int size) {
  std::vector<FieldElement> v;
  for (int i = 0; i < size; ++i) v.push_back(k.from_int(3 + 2 * i));
  return IndexSet(k, std::move(v));
}

void BM_RatFuncArithmetic(benchmark::State& state) {
  const Field k = Field::prime(101);
  const RatFunc x = RatFunc::variable(k);
  const RatFunc a = (x * x + RatFunc::one(k)) / (x - RatFunc::from_int(k, 3));
  for (auto _ : state) {
    RatFunc r = a;
    for (int i = 0; i < state.range(0); ++i) r = r * a + x;
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_RatFuncArithmetic)->Arg(2)->Arg(4)->Arg(8);

void BM_BuildGI(benchmark::State& state) {
  const Field k = Field::prime(101);
  const IndexSet i = sample_set(k, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_GI(i));
}
BENCHMARK(BM_BuildGI)->Arg(0)->Arg(1)->Arg(3);

void BM_RecoverI(benchmark::State& state) {
  const Field k = Field::prime(101);
  const ElementaryGroup g = build_GI(sample_set(k, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(recover_I(g));
}
BENCHMARK(BM_RecoverI)->Arg(1)->Arg(3);

void BM_ClassifyC1(benchmark::State& state) {
  const Field k = Field::prime(101);
  const ElementaryGroup g = build_GI(sample_set(k, 2));
  const PlaneMap h(KMoebius(k.one(), k.from_int(2), k.from_int(3), k.from_int(7)),
                   KtMoebius::scaling(RatFunc::variable(k) + RatFunc::one(k)));
  std::vector<PlaneMap> gens;
  for (const auto& x : g.generators) gens.push_back(x.conjugate_by(h));
  for (auto _ : state) benchmark::DoNotOptimize(classify_c1(gens));
}
BENCHMARK(BM_ClassifyC1)->Unit(benchmark::kMillisecond);

void BM_FiberStatistics(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fiber_statistics(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_FiberStatistics)->Arg(31)->Arg(43)->Unit(benchmark::kMillisecond);

void BM_JacobianSymbolic(benchmark::State& state) {
  const Field qq = Field::rationals();
  for (auto _ : state) benchmark::DoNotOptimize(jacobian_identity_symbolic(qq));
}
BENCHMARK(BM_JacobianSymbolic)->Unit(benchmark::kMillisecond);

void BM_Jbar(benchmark::State& state) {
  const Field qq = Field::rationals();
  const QuarticDP s({qq.from_int(0), qq.from_int(1), qq.from_int(2), qq.from_int(3), qq.from_int(7)});
  for (auto _ : state) benchmark::DoNotOptimize(Jbar(s));
}
BENCHMARK(BM_Jbar);

}  // namespace

BENCHMARK_MAIN();
