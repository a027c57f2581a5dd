// Parallel kernels against their serial references. Set OMP_NUM_THREADS to
// compare thread counts.

#include <benchmark/benchmark.h>

#include "mereo/axioms.hpp"
#include "mereo/eca.hpp"
#include "mereo/representations.hpp"
#include "mereo/topology.hpp"

namespace {

using namespace mereo;

CoveringRelation discrete(unsigned k) { return CoveringRelation::discrete(FiniteBooleanAlgebra(k)); }

void BM_CheckEca(benchmark::State& state) {
  const auto v = discrete(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_eca(v));
}

void BM_CheckEcaReference(benchmark::State& state) {
  const auto v = discrete(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::check_eca(v));
}

void BM_CheckWeca(benchmark::State& state) {
  const auto v = discrete(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_weca(v));
}

void BM_CheckWecaReference(benchmark::State& state) {
  const auto v = discrete(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::check_weca(v));
}

void BM_CheckRelativeContact(benchmark::State& state) {
  const auto v = discrete(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_relative_contact(v));
}

void BM_CheckRelativeContactReference(benchmark::State& state) {
  const auto v = discrete(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::check_relative_contact(v));
}

// Type-2 pipeline on the discrete space with n points: n atoms, n worlds.
Type2Representation type2(std::size_t n) {
  std::vector<PointSet> sb;
  for (std::size_t i = 0; i < n; ++i) sb.push_back(PointSet::of(n, {i}));
  return build_type2(RegularClosedAlgebra(generate_topology(n, sb)));
}

void BM_VerifyEmbedding(benchmark::State& state) {
  const auto rep = type2(static_cast<std::size_t>(state.range(0)));
  const auto cov = target_covering(rep);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_embedding(rep.embedding.source.covering(), rep.embedding.image, cov));
  }
}

void BM_VerifyEmbeddingReference(benchmark::State& state) {
  const auto rep = type2(static_cast<std::size_t>(state.range(0)));
  const auto cov = target_covering(rep);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::verify_embedding(rep.embedding.source.covering(), rep.embedding.image, cov));
  }
}

}  // namespace

BENCHMARK(BM_CheckEca)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckEcaReference)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckWeca)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckWecaReference)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckRelativeContact)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckRelativeContactReference)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyEmbedding)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyEmbeddingReference)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
