#include <benchmark/benchmark.h>

#include "pgq/quantization.hpp"
#include "pgq/verify.hpp"

namespace {

pgq::PGElement random_symbol(int l, std::uint64_t seed) {
  pgq::Rng rng(seed);
  pgq::MatrixC c(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) c(i, j) = rng.complex_unit_box();
  return pgq::PGElement(c);
}

void BM_MultiplyClosed(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const pgq::AlgebraCtx ctx(l, 0.5);
  const auto f = random_symbol(l, 1);
  const auto g = random_symbol(l, 2);
  for (auto _ : state) benchmark::DoNotOptimize(pgq::multiply(f, g, ctx));
}
BENCHMARK(BM_MultiplyClosed)->DenseRange(2, 6);

void BM_ToeplitzClosed(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const pgq::AlgebraCtx ctx(l, 0.5);
  const auto w = pgq::WeightSeq::factorial(l);
  const auto g = random_symbol(l, 3);
  for (auto _ : state) benchmark::DoNotOptimize(pgq::toeplitz(g, w, ctx, pgq::ToeplitzMode::Closed));
}
BENCHMARK(BM_ToeplitzClosed)->DenseRange(2, 6);

void BM_ToeplitzProjection(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const pgq::AlgebraCtx ctx(l, 0.5);
  const auto w = pgq::WeightSeq::factorial(l);
  const auto g = random_symbol(l, 3);
  for (auto _ : state) benchmark::DoNotOptimize(pgq::toeplitz(g, w, ctx, pgq::ToeplitzMode::Projection));
}
BENCHMARK(BM_ToeplitzProjection)->DenseRange(2, 6);

void BM_FormClosed(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const auto w = pgq::WeightSeq::factorial(l);
  const auto f = random_symbol(l, 4);
  const auto g = random_symbol(l, 5);
  for (auto _ : state) benchmark::DoNotOptimize(pgq::form(f, g, w, pgq::FormMode::Closed));
}
BENCHMARK(BM_FormClosed)->DenseRange(2, 6);

void BM_FormDefinitional(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const auto w = pgq::WeightSeq::factorial(l);
  const auto f = random_symbol(l, 4);
  const auto g = random_symbol(l, 5);
  for (auto _ : state) benchmark::DoNotOptimize(pgq::form(f, g, w, pgq::FormMode::Definitional));
}
BENCHMARK(BM_FormDefinitional)->DenseRange(2, 6);

void BM_VerifyPoint(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const pgq::GridPoint point{l, 2.0, "2", "factorial", pgq::WeightSeq::factorial(l)};
  const pgq::VerifyOptions options;
  for (auto _ : state) benchmark::DoNotOptimize(pgq::verify_point(point, options));
}
BENCHMARK(BM_VerifyPoint)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
