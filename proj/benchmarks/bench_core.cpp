#include <benchmark/benchmark.h>

#include "hoffdig/bgw.hpp"
#include "hoffdig/biangular.hpp"
#include "hoffdig/hoffman.hpp"
#include "hoffdig/int_matrix.hpp"
#include "hoffdig/spectral.hpp"

using namespace hoffdig;

namespace {

const Class5Construction& cached_drad160() {
  static const Class5Construction c = drad160();
  return c;
}

void BM_Mul160(benchmark::State& state) {
  const IntMatrix& g = cached_drad160().g;
  for (auto _ : state) benchmark::DoNotOptimize(mul(g, transpose(g)));
}
BENCHMARK(BM_Mul160)->Unit(benchmark::kMillisecond);

void BM_Jacobi160(benchmark::State& state) {
  const IntMatrix& a = cached_drad160().twins.a1;
  const IntMatrix s = a + transpose(a);
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_eigenvalues(s));
}
BENCHMARK(BM_Jacobi160)->Unit(benchmark::kMillisecond);

void BM_HoffmanBound160(benchmark::State& state) {
  const Digraph a1(cached_drad160().twins.a1);
  for (auto _ : state) benchmark::DoNotOptimize(hoffman_bound(a1));
}
BENCHMARK(BM_HoffmanBound160)->Unit(benchmark::kMillisecond);

void BM_Class5Verification(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(drad160());
}
BENCHMARK(BM_Class5Verification)->Unit(benchmark::kMillisecond);

void BM_BiangularScheme(benchmark::State& state) {
  const unsigned k = static_cast<unsigned>(state.range(0));
  const SignMatrix h = sylvester(k);
  for (auto _ : state) benchmark::DoNotOptimize(scheme_from_biangular(biangular_skew(h)));
  state.SetLabel("n=" + std::to_string(h.order()));
}
BENCHMARK(BM_BiangularScheme)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_NumericEigenmatrices(benchmark::State& state) {
  const AssociationScheme& s = cached_drad160().scheme;
  for (auto _ : state) benchmark::DoNotOptimize(compute_eigenmatrices(s));
}
BENCHMARK(BM_NumericEigenmatrices)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
