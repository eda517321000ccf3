#include <benchmark/benchmark.h>

#include "pathdual/average.hpp"
#include "pathdual/duality.hpp"

using namespace pathdual;

namespace {

const Geometry kTilted = Geometry::direction(Vector3(1, 0.4, 0.2));

ChannelPair hpres() { return resolve_channel(Channel::HelicityPreserving); }

void BM_BuildPathOperator(benchmark::State& state) {
  const ChannelPair pair = hpres();
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_path_operator(Path::A, pair.in, pair.out, kTilted));
  }
}
BENCHMARK(BM_BuildPathOperator);

void BM_TraceNorm(benchmark::State& state) {
  const ChannelPair pair = hpres();
  const InitialState rho = build_initial_state(0.3);
  const PathOperators ops = build_path_operators(pair.in, pair.out, kTilted);
  const Matrix4c diff =
      ops.t_a * rho.rho() * ops.t_a.adjoint() - ops.t_b * rho.rho() * ops.t_b.adjoint();
  for (auto _ : state) {
    benchmark::DoNotOptimize(trace_norm(diff));
  }
}
BENCHMARK(BM_TraceNorm);

void BM_EvaluatePoint(benchmark::State& state) {
  const ChannelPair pair = hpres();
  const InitialState rho = build_initial_state(0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_point(rho, pair.in, pair.out, kTilted));
  }
}
BENCHMARK(BM_EvaluatePoint);

void BM_AveragedDuality(benchmark::State& state) {
  const ChannelPair pair = hpres();
  const Quadrature quad =
      build_quadrature(QuadratureScheme::ProductGrid, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(averaged_duality(0.0, pair.in, pair.out, quad));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(quad.nodes.size()));
}
BENCHMARK(BM_AveragedDuality)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
