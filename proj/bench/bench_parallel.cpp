#include <benchmark/benchmark.h>

#include <numbers>

#include "worm3/cauchy.hpp"
#include "worm3/certify.hpp"
#include "worm3/norm_integral.hpp"
#include "worm3/paley_wiener.hpp"
#include "worm3/selection.hpp"
#include "worm3/strip_weight.hpp"

using namespace worm3;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

void BM_Certify(benchmark::State& state) {
  const auto eta = make_convex_sum_profile(3.2, 4.2);
  CertifyOptions opt;
  opt.samples = 2000;
  opt.grid = 64;
  for (auto _ : state)
    benchmark::DoNotOptimize(certify(*eta, DomainParams::make(3.2, 4.2), opt, exec_of(state)));
}

void BM_Select(benchmark::State& state) {
  const auto shape = MainProfileParams::from_factors(3.2, 1.01, 1.2);
  SelectionOptions opt;
  opt.grid = 200;
  for (auto _ : state) benchmark::DoNotOptimize(select_constants(shape, opt, exec_of(state)));
}

void BM_SpatialNorm(benchmark::State& state) {
  SpectralProfile f{{{0.0, 1.0, 1.0}, {0.7, 0.5, cplx(0.3, -0.2)}}};
  const StripWeight w{std::numbers::pi, -1, -1};
  for (auto _ : state) benchmark::DoNotOptimize(spatial_norm2(f, w, {}, exec_of(state)));
}

void BM_MonteCarlo(benchmark::State& state) {
  const NormIntegralSpec spec{-0.3, 0.1, 0, -1, std::numbers::pi};
  for (auto _ : state)
    benchmark::DoNotOptimize(norm_monte_carlo(spec, 1'000'000, 7, 64, exec_of(state)));
}

void BM_Cauchy(benchmark::State& state) {
  const Point3 p(1.0, 1.0, std::polar(1.0, std::numbers::pi / 4));
  const PointFunction f = [](const Point3& q) { return q.z1 * q.z2 * q.z2 / q.z3; };
  for (auto _ : state)
    benchmark::DoNotOptimize(cauchy_extend(f, -std::numbers::pi, p, 14.0, 512, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_Certify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Select)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SpatialNorm)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MonteCarlo)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Cauchy)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
