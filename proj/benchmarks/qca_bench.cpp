#include <benchmark/benchmark.h>

#include "qca/bases.hpp"
#include "qca/characters.hpp"
#include "qca/graded.hpp"
#include "qca/grassmannian.hpp"
#include "qca/mutation.hpp"
#include "qca/rep.hpp"

using namespace qca;

namespace {

Quiver a3() { return Quiver(3, {{1, 3}, {2, 3}}); }
Quiver triangle() { return Quiver(3, {{1, 2}, {2, 3}, {1, 3}}); }

QuantumSeed z_seed(const Quiver& q) {
  IceQuiver iq = build_z(q, 1);
  return initial_seed(lambda_z(iq), b_matrix(iq));
}

void BM_ExploreA3(benchmark::State& state) {
  QuantumSeed s = z_seed(a3());
  for (auto _ : state) benchmark::DoNotOptimize(explore(s, {static_cast<int>(state.range(0)), 100000}));
}
BENCHMARK(BM_ExploreA3)->Arg(3)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_ClusterVariableTriangle(benchmark::State& state) {
  QuantumSeed s = z_seed(triangle());
  std::vector<int> word;
  for (int i = 0; i < state.range(0); ++i) word.push_back(1 + i % 3);
  for (auto _ : state) benchmark::DoNotOptimize(cluster_variable(s, word, word.back()));
}
BENCHMARK(BM_ClusterVariableTriangle)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

// cold cache each iteration: the whole lower set gets rebuilt
void BM_CanonicalA3(benchmark::State& state) {
  BasisContext ctx(a3(), Setting::L);
  auto ws = level1_vectors(3, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    ctx.clear_cache();
    for (const auto& w : ws) benchmark::DoNotOptimize(ctx.canonical(w));
  }
  state.counters["elements"] = static_cast<double>(ws.size());
}
BENCHMARK(BM_CanonicalA3)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_CqInverse(benchmark::State& state) {
  QCartan c(triangle());
  for (auto _ : state) benchmark::DoNotOptimize(c.inverse_euler(1, 0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CqInverse)->Arg(16)->Arg(32);

void BM_GrassPolynomial(benchmark::State& state) {
  RationalRep p = build_projective(a3(), 3);
  std::vector<int> e(p.dims.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = p.dims[i] / 2;
  for (auto _ : state) benchmark::DoNotOptimize(grass_polynomial(p, e));
}
BENCHMARK(BM_GrassPolynomial)->Unit(benchmark::kMillisecond);

void BM_GenericCharacterKronecker(benchmark::State& state) {
  Quiver q(2, {{1, 2}, {1, 2}});
  const long long m = state.range(0);
  WVector w = WVector::level1({m, 0}, {0, m});
  for (auto _ : state) benchmark::DoNotOptimize(generic_character(q, w));
}
BENCHMARK(BM_GenericCharacterKronecker)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
