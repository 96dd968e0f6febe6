#include <benchmark/benchmark.h>

#include <vector>

#include "qcert/certifier.hpp"
#include "qcert/constants.hpp"
#include "qcert/cubic.hpp"
#include "qcert/polynomial.hpp"
#include "qcert/rootlab.hpp"
#include "qcert/sampling.hpp"

namespace {

qcert::ComplexPoly sample_poly(int degree) {
  qcert::QuotientSampler s(17);
  return qcert::from_quotients(s.sample(degree, 4.9, 6.0));
}

void BM_SolveB(benchmark::State& state) {
  const auto order = state.range(0) == 0 ? qcert::SeriesOrder::infinite()
                                         : qcert::SeriesOrder::finite(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qcert::solve_b(order));
}
BENCHMARK(BM_SolveB)->Arg(1)->Arg(2)->Arg(10)->Arg(0);

void BM_ThresholdTable100(benchmark::State& state) {
  for (auto _ : state) {
    qcert::ThresholdTable t;
    t.precompute(100);
    benchmark::DoNotOptimize(t.b(100));
  }
}
BENCHMARK(BM_ThresholdTable100)->Unit(benchmark::kMillisecond);

void BM_Certify(benchmark::State& state) {
  const auto p = sample_poly(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qcert::certify(p, qcert::TheoremChoice::kAuto));
}
BENCHMARK(BM_Certify)->Arg(4)->Arg(12)->Arg(24);

void BM_FindRoots(benchmark::State& state) {
  const auto p = sample_poly(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qcert::find_roots(p));
}
BENCHMARK(BM_FindRoots)->Arg(4)->Arg(12)->Arg(24);

void BM_WindingCount(benchmark::State& state) {
  const auto p = sample_poly(static_cast<int>(state.range(0)));
  const auto radii = qcert::radii(qcert::quotients(p));
  const double r = radii.circle(radii.size() / 2 + 1);
  for (auto _ : state) benchmark::DoNotOptimize(qcert::winding_count(p, r));
}
BENCHMARK(BM_WindingCount)->Arg(4)->Arg(12)->Arg(24);

void BM_VerifyAnnuli(benchmark::State& state) {
  const auto p = sample_poly(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qcert::verify_annuli(p));
}
BENCHMARK(BM_VerifyAnnuli)->Arg(4)->Arg(12);

void BM_MaxModulusScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qcert::cubic::max_modulus_scan(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_MaxModulusScan)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
