#include <benchmark/benchmark.h>

#include "orbitq/orbitq.hpp"

using namespace orbitq;

namespace {

Weight diagonal(const RootDatum& rd, std::int64_t c) {
  Weight w(rd.rank());
  for (std::size_t i = 0; i < rd.rank(); ++i) w[i] = c;
  return w;
}

void BM_Freudenthal(benchmark::State& state, const char* kind) {
  const auto rd = build_root_datum(kind);
  const Weight lambda = diagonal(rd, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dominant_multiplicities(rd, lambda));
}
BENCHMARK_CAPTURE(BM_Freudenthal, A2, "A2")->Arg(2)->Arg(4)->Arg(8);
BENCHMARK_CAPTURE(BM_Freudenthal, B3, "B3")->Arg(1)->Arg(2)->Arg(3);
BENCHMARK_CAPTURE(BM_Freudenthal, G2, "G2")->Arg(2)->Arg(4);

void BM_Klimyk(benchmark::State& state, const char* kind) {
  const auto rd = build_root_datum(kind);
  const Weight lambda = diagonal(rd, state.range(0));
  const Weight mu = diagonal(rd, state.range(0) / 2 + 1);
  for (auto _ : state) benchmark::DoNotOptimize(tensor_decompose(rd, lambda, mu));
}
BENCHMARK_CAPTURE(BM_Klimyk, A2, "A2")->Arg(2)->Arg(4)->Arg(8);
BENCHMARK_CAPTURE(BM_Klimyk, C3, "C3")->Arg(1)->Arg(2);

void BM_QuantizeInducedSweep(benchmark::State& state) {
  const auto g = GroupDescriptor::preset("SL3C");
  const auto& rd = g.k_datum();
  const std::int64_t bound = state.range(0);
  for (auto _ : state) {
    std::size_t terms = 0;
    for (std::int64_t a = 0; a <= bound; ++a)
      for (std::int64_t b = 0; b <= bound; ++b) {
        const OrbitProductManifold n(rd, {Weight{a, b}, Weight{b, a}, Weight{1, 1}});
        terms += quantize_induced(g, n).terms().size();
      }
    benchmark::DoNotOptimize(terms);
  }
}
BENCHMARK(BM_QuantizeInducedSweep)->Arg(1)->Arg(2)->Arg(3);

void BM_PullbackIdentity(benchmark::State& state, const char* name) {
  const auto alg = build_numeric_algebra(name);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_pullback_identity(alg, 1.0 + alg.rho_c(), static_cast<int>(state.range(0)), 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK_CAPTURE(BM_PullbackIdentity, sl2r, "sl2r")->Arg(1000);
BENCHMARK_CAPTURE(BM_PullbackIdentity, sl2c_real, "sl2c_real")->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
