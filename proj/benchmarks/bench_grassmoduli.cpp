#include <benchmark/benchmark.h>

#include "grassmoduli/lr.hpp"
#include "grassmoduli/moduli.hpp"
#include "grassmoduli/oracle.hpp"
#include "grassmoduli/rect_decomp.hpp"
#include "grassmoduli/schur.hpp"

namespace {

using namespace grassmoduli;

void BM_RectSquareClosedForm(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(rect_square_closed_form(q + 1, q, k));
}
BENCHMARK(BM_RectSquareClosedForm)->Args({2, 4})->Args({3, 3})->Args({4, 6});

void BM_LRProductRectangle(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const Partition rect = Partition::rectangle(q, k);
  for (auto _ : state)
    benchmark::DoNotOptimize(lr_product(rect, rect, 2 * q));
}
BENCHMARK(BM_LRProductRectangle)->Args({2, 2})->Args({2, 3})->Args({3, 3});

void BM_Adams2Rectangle(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const Partition rect = Partition::rectangle(q, k);
  for (auto _ : state) benchmark::DoNotOptimize(adams2(rect, 2 * q));
}
BENCHMARK(BM_Adams2Rectangle)->Args({2, 2})->Args({2, 3})->Args({3, 3});

void BM_OracleSchurSquare(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const Partition rect = Partition::rectangle(q, k);
  for (auto _ : state) {
    oracle::MonomialPoly poly = oracle::schur_poly(rect, 2 * q);
    benchmark::DoNotOptimize(oracle::to_schur_basis(poly * poly));
  }
}
BENCHMARK(BM_OracleSchurSquare)->Args({2, 2})->Args({2, 3})->Args({3, 2});

void BM_ModuliReport(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(moduli_report(q + 1, q, k));
}
BENCHMARK(BM_ModuliReport)->Args({2, 2})->Args({3, 2})->Args({3, 3});

void BM_DimRectLarge(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(dim_rect(a, a / 2, a / 4));
}
BENCHMARK(BM_DimRectLarge)->Arg(20)->Arg(40)->Arg(80);

}  // namespace

BENCHMARK_MAIN();
