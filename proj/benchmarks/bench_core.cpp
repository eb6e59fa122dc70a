#include <benchmark/benchmark.h>

#include <vbgeo/vbgeo.hpp>

using namespace vbgeo;

namespace {

TotalSpace bs_s4() {
  const BaseChart s4 = model_chart(ChartKind::sphere, 4);
  return TotalSpace(s4, lambda2_bundle(s4, Orientation::minus), bryant_salamon_profile(1, 1, 1));
}

TotalPoint sample_point() {
  Vec x(4), y(3);
  x << 0.1, -0.2, 0.05, 0.3;
  y << 0.3, -0.1, 0.2;
  return {x, y};
}

}  // namespace

static void BM_PointGeometry(benchmark::State& state) {
  const TotalSpace s = bs_s4();
  const TotalPoint p = sample_point();
  for (auto _ : state) benchmark::DoNotOptimize(s.at(p));
}
BENCHMARK(BM_PointGeometry);

static void BM_LeviCivita(benchmark::State& state) {
  const TotalSpace s = bs_s4();
  const PointGeometry pg = s.at(sample_point());
  const SplitVector X{Vec::Constant(4, 0.5), Vec::Constant(3, -0.2)};
  const VectorField xi = VectorField::tautological(4, 3, sample_point().y);
  for (auto _ : state) benchmark::DoNotOptimize(pg.levi_civita(X, xi));
}
BENCHMARK(BM_LeviCivita);

static void BM_GeodesicStep(benchmark::State& state) {
  const TotalSpace s = bs_s4();
  const GeodesicState st = state_from_velocity(s, sample_point().x, sample_point().y,
                                               Vec::Constant(4, 0.2), Vec::Constant(3, 0.1));
  for (auto _ : state) benchmark::DoNotOptimize(geodesic_rhs(s, st));
}
BENCHMARK(BM_GeodesicStep);

static void BM_ZeroSectionTensor(benchmark::State& state) {
  const TotalSpace s = bs_s4();
  for (auto _ : state) benchmark::DoNotOptimize(zero_section_tensor(s, sample_point().x));
}
BENCHMARK(BM_ZeroSectionTensor);

static void BM_RiemannOracle(benchmark::State& state) {
  const TotalSpace s = bs_s4();
  for (auto _ : state) benchmark::DoNotOptimize(fd_riemann_oracle(s, sample_point()));
}
BENCHMARK(BM_RiemannOracle)->Unit(benchmark::kMillisecond);

static void BM_G2Closure(benchmark::State& state) {
  const TotalSpace s = bs_s4();
  std::vector<SkewOperator> ops;
  for (const auto& g : curvature_generators(s, Vec::Zero(4))) ops.push_back(g.op);
  for (auto _ : state) benchmark::DoNotOptimize(lie_closure(ops));
}
BENCHMARK(BM_G2Closure)->Unit(benchmark::kMicrosecond);

static void BM_G2Decomposition(benchmark::State& state) {
  const TotalSpace s = bs_s4();
  for (auto _ : state) benchmark::DoNotOptimize(g2_decomposition(s, Vec::Zero(4)));
}
BENCHMARK(BM_G2Decomposition)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
