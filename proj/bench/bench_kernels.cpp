// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS to vary the
// thread count; the Serial variants ignore it.

#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "nfobs/kernels.hpp"

using namespace nfobs;

namespace {

Model ring_model() {
  ModelParams p;
  p.j0 = -1.0;
  p.j1 = 1.5;
  p.sigmoid.gain = 10.0;
  return Model(p);
}

void BM_GammaGrid(benchmark::State& state) {
  const Model m = ring_model();
  const auto exec = static_cast<Exec>(state.range(0));
  std::vector<double> v0s, rhos;
  for (int i = 0; i < 32; ++i) v0s.push_back(-3.0 + 6.0 * i / 31);
  for (int i = 0; i < 32; ++i) rhos.push_back(6.0 * i / 31);
  for (auto _ : state) benchmark::DoNotOptimize(gamma_grid(m, v0s, rhos, 3, 3, exec));
  state.SetItemsProcessed(state.iterations() * 32 * 32);
}

void BM_Roundtrip(benchmark::State& state) {
  const Model m = ring_model();
  const auto in = std::make_shared<CircularInput>(1.0, 0.5, 2.0);
  const auto exec = static_cast<Exec>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> u(0.3, 1.5), a(-3.14, 3.14);
  std::vector<Vec3> probes;
  for (int i = 0; i < 256; ++i) {
    const double r = u(rng), t = a(rng);
    probes.emplace_back((i % 2 ? 1 : -1) * u(rng), r * std::cos(t), r * std::sin(t));
  }
  const InverseConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(roundtrip_errors(cfg, m, *in, probes, 0.3, exec));
  state.SetItemsProcessed(state.iterations() * 256);
}

void BM_RunBatch(benchmark::State& state) {
  const auto exec = static_cast<Exec>(state.range(0));
  std::vector<Scenario> batch;
  for (int i = 0; i < 8; ++i) {
    Scenario s;
    s.params.j0 = -1.0;
    s.params.j1 = 1.5;
    s.params.sigmoid.gain = 2.0;
    s.input = std::make_shared<CircularInput>(2.0, 0.5, 2.0);
    s.observer.inverse.delta = 0.1;
    s.v_init = {1.0, 0.5, -0.3};
    s.vhat_init = {1.0 + 0.05 * i, 0.4, -0.2};
    s.t_end = 0.5;
    s.dt = 1e-3;
    batch.push_back(s);
  }
  for (auto _ : state) benchmark::DoNotOptimize(run_batch(batch, exec));
  state.SetItemsProcessed(state.iterations() * 8);
}

}  // namespace

BENCHMARK(BM_GammaGrid)->Arg(static_cast<int>(Exec::Serial))->Arg(static_cast<int>(Exec::Parallel))->ArgName("parallel");
BENCHMARK(BM_Roundtrip)->Arg(static_cast<int>(Exec::Serial))->Arg(static_cast<int>(Exec::Parallel))->ArgName("parallel");
BENCHMARK(BM_RunBatch)->Arg(static_cast<int>(Exec::Serial))->Arg(static_cast<int>(Exec::Parallel))->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
