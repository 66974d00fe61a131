#include <benchmark/benchmark.h>

#include <cartankit/graded.hpp>
#include <cartankit/nonhomog.hpp>
#include <cartankit/sample_sets.hpp>
#include <cartankit/weyl.hpp>

using namespace cartan;

namespace {

SymmetrySystem adapted(const FlatModel& model) {
  std::vector<Rat> z(model.dimension()), half(model.dimension());
  for (std::size_t a = 0; a < z.size(); ++a) {
    z[a] = Rat(static_cast<long>(a) + 1, 2);
    half[a] = Rat(-1, 2) * z[a];
  }
  return SymmetrySystem::conjugation(model, make_origin_symmetry(model, z), model.exp_plus(half));
}

void BM_MatrixInverse(benchmark::State& state) {
  Sampler rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  Mat a(n, n);
  do {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) a(r, c) = rng.rational();
  } while (determinant(a).is_zero());
  for (auto _ : state) benchmark::DoNotOptimize(mat_inverse(a));
}
BENCHMARK(BM_MatrixInverse)->Arg(3)->Arg(5)->Arg(8);

void BM_EnumerateOriginSymmetries(benchmark::State& state) {
  const FlatModel model = FlatModel::projective(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_origin_symmetries(model));
}
BENCHMARK(BM_EnumerateOriginSymmetries)->DenseRange(1, 5);

void BM_LoosAxioms(benchmark::State& state) {
  const FlatModel model = FlatModel::projective(static_cast<int>(state.range(0)));
  const SymmetrySystem sys = adapted(model);
  Sampler rng(2);
  const auto set = sample_loos_pairs(sys, rng, 50);
  for (auto _ : state) benchmark::DoNotOptimize(check_loos_axioms(sys, set.pairs));
  state.SetItemsProcessed(state.iterations() * 50);
}
BENCHMARK(BM_LoosAxioms)->Arg(2)->Arg(3);

void BM_InvariantGauge(benchmark::State& state) {
  const FlatModel model = FlatModel::projective(static_cast<int>(state.range(0)));
  const SymmetrySystem sys = adapted(model);
  Sampler rng(3);
  const auto set = sample_weyl_pairs(sys, rng, 50);
  std::vector<Frame> frames;
  for (const auto& s : set.samples) frames.push_back(s.u0);
  for (auto _ : state) benchmark::DoNotOptimize(invariant_gauge(sys, frames, set.samples));
  state.SetItemsProcessed(state.iterations() * 50);
}
BENCHMARK(BM_InvariantGauge)->Arg(2)->Arg(3);

void BM_Codifferential(benchmark::State& state) {
  const AlgebraPtr alg = build_projective_algebra(static_cast<int>(state.range(0)));
  Sampler rng(4);
  Cochain2 k(alg);
  for (std::size_t p = 0; p < k.pair_count(); ++p) {
    const auto [i, j] = k.pair_at(p);
    k.set(i, j, AlgElement(alg, rng.rational_vector(alg->dim())));
  }
  for (auto _ : state) benchmark::DoNotOptimize(codifferential(k));
}
BENCHMARK(BM_Codifferential)->Arg(2)->Arg(3)->Arg(4);

void BM_LineSymmetry(benchmark::State& state) {
  const PuncturedModel pm(static_cast<int>(state.range(0)));
  std::vector<Rat> rep(static_cast<std::size_t>(pm.m()) + 1);
  rep[rep.size() - 2] = Rat(3, 2);
  rep[rep.size() - 1] = Rat(-5, 3);
  for (auto _ : state) {
    const LineSymmetry ls = line_symmetry(rep, pm);
    benchmark::DoNotOptimize(eliminate_symmetry_family(ls.conjugator, pm));
  }
}
BENCHMARK(BM_LineSymmetry)->DenseRange(2, 5);

}  // namespace

BENCHMARK_MAIN();
