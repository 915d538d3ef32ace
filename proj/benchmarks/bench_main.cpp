#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "pentamod/area.hpp"
#include "pentamod/membership.hpp"
#include "pentamod/pentagon.hpp"
#include "pentamod/reduction.hpp"
#include "pentamod/sampling.hpp"

using namespace pentamod;

namespace {

std::vector<UnitVec> sphere_points(std::size_t count) {
  std::mt19937_64 rng(11);
  std::vector<UnitVec> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) pts.push_back(uniform_sphere_point(rng));
  return pts;
}

const std::vector<UnitVec>& points() {
  static const std::vector<UnitVec> pts = sphere_points(4096);
  return pts;
}

void BM_OracleMembership(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_in_moduli(n, points()[i++ & 4095]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_OracleMembership)->Arg(3)->Arg(4)->Arg(5);

void BM_AnalyticMembership(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(analytic_in_moduli(n, points()[i++ & 4095]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_AnalyticMembership)->Arg(3)->Arg(4)->Arg(5);

void BM_BoundaryDistance(benchmark::State& state) {
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(distance_to_boundary_loci(4, points()[i++ & 4095]));
  }
}
BENCHMARK(BM_BoundaryDistance);

void BM_EllipticF(benchmark::State& state) {
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(elliptic_F_imag(t, 0.35));
    t = t < 1.5 ? t + 0.01 : 0.1;
  }
}
BENCHMARK(BM_EllipticF);

void BM_PartAreas(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(part_areas(n).total);
}
BENCHMARK(BM_PartAreas)->Arg(3)->Arg(5);

void BM_ReductionPoint(benchmark::State& state) {
  double theta = 0.5 * kPi;
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduction_point(ReductionKind::BC, 4, theta).sample.r);
    theta = theta < 0.95 * kPi ? theta + 0.001 : 0.5 * kPi;
  }
}
BENCHMARK(BM_ReductionPoint);

void BM_MonteCarlo(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(monte_carlo_area(4, 100000, 42, 1).estimate);
  }
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_MonteCarlo)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
