#include <sixv/efp/efp_engine.hpp>
#include <sixv/ik/determinant.hpp>
#include <sixv/qism/oracle.hpp>
#include <sixv/row/row_engine.hpp>

#include <benchmark/benchmark.h>

using namespace sixv;

namespace {

const VertexWeights<Rational> kWeights(2, 1, 2);

void BM_PartitionQism(benchmark::State& state) {
  auto lw = LatticeWeights<Rational>::homogeneous(kWeights, std::size_t(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(partition_qism(lw));
}
BENCHMARK(BM_PartitionQism)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_EnumerateDfs(benchmark::State& state) {
  auto lw = LatticeWeights<Rational>::homogeneous(kWeights, std::size_t(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_dfs(lw).value);
}
BENCHMARK(BM_EnumerateDfs)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_IkDetHomExact(benchmark::State& state) {
  const std::size_t n = std::size_t(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ik_det_hom_exact(n, kWeights));
}
BENCHMARK(BM_IkDetHomExact)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

void BM_IkDetInhom(benchmark::State& state) {
  const std::size_t n = std::size_t(state.range(0));
  std::vector<Real> lambda, nu;
  for (std::size_t i = 0; i < n; ++i) {
    lambda.push_back(Real(1) + Real(long(i)) / 20);
    nu.push_back(Real(long(i)) / 30 - Real(1) / 10);
  }
  SpectralParams p(lambda, nu, Real(3) / 10);
  for (auto _ : state) benchmark::DoNotOptimize(ik_det_inhom(p));
}
BENCHMARK(BM_IkDetInhom)->DenseRange(4, 12, 4)->Unit(benchmark::kMicrosecond);

void BM_ZtopResidue(benchmark::State& state) {
  const std::size_t n = 6, s = std::size_t(state.range(0));
  RowEngine<Rational> eng(kWeights);
  auto cfgs = RowConfig::all(n, s);
  for (auto _ : state) {
    for (const auto& cfg : cfgs) benchmark::DoNotOptimize(eng.ztop_residue(cfg));
  }
  state.SetItemsProcessed(std::int64_t(state.iterations() * cfgs.size()));
}
BENCHMARK(BM_ZtopResidue)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_ZbotResidue(benchmark::State& state) {
  const std::size_t n = 5, s = std::size_t(state.range(0));
  RowEngine<Rational> eng(kWeights);
  eng.h_multi_build(n, s);
  auto cfgs = RowConfig::all(n, s);
  for (auto _ : state) {
    for (const auto& cfg : cfgs) benchmark::DoNotOptimize(eng.zbot_residue(cfg));
  }
  state.SetItemsProcessed(std::int64_t(state.iterations() * cfgs.size()));
}
BENCHMARK(BM_ZbotResidue)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_EfpRoute(benchmark::State& state) {
  RowEngine<Rational> row(kWeights);
  EfpEngine<Rational> efp(row);
  const EfpQuery q{5, 4, 3};
  row.h_multi_build(q.n, q.s);
  row.h_multi_build(q.s, q.s);
  for (auto _ : state) {
    switch (state.range(0)) {
      case 0: benchmark::DoNotOptimize(efp.rep1(q)); break;
      case 1: benchmark::DoNotOptimize(efp.rep2(q)); break;
      default: benchmark::DoNotOptimize(efp.efp_double(q)); break;
    }
  }
  state.SetLabel(state.range(0) == 0 ? "rep1" : state.range(0) == 1 ? "rep2" : "double");
}
BENCHMARK(BM_EfpRoute)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
