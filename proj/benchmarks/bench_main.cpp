#include <benchmark/benchmark.h>

#include "friedrichs/boundary_model.hpp"
#include "friedrichs/elliptic1d.hpp"
#include "friedrichs/oracles.hpp"
#include "friedrichs/transport1d.hpp"

namespace {

using namespace friedrichs;

void BM_OrthoComplement(benchmark::State& state) {
  const ModelPtr model = random_model(7, 4, 4);
  const ContractionU u = random_contraction(11, model, 0.9);
  const BCSubspace v = v_from_contraction(u);
  for (auto _ : state) {
    Subspace perp = ortho_complement(model->form(), v.space());
    benchmark::DoNotOptimize(perp);
  }
}
BENCHMARK(BM_OrthoComplement);

void BM_MFromV(benchmark::State& state) {
  const ModelPtr model = random_model(13, 3, 5);
  const ContractionU u = random_contraction(17, model, 0.8);
  const BCSubspace v = v_from_contraction(u);
  for (auto _ : state) {
    MOperatorMat m = m_from_v(v);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_MFromV);

void BM_VFromM(benchmark::State& state) {
  const ModelPtr model = random_model(13, 3, 5);
  const ContractionU u = random_contraction(17, model, 0.8);
  const MOperatorMat m = m_from_v(v_from_contraction(u));
  for (auto _ : state) {
    VFromM back = v_from_m(m);
    benchmark::DoNotOptimize(back);
  }
}
BENCHMARK(BM_VFromM);

void BM_TransportSolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GridFunction f = GridFunction::sample([](double x) { return std::cos(3.0 * x); }, n);
  for (auto _ : state) {
    GridFunction u = solve_realisation(Alpha(2.0), f);
    benchmark::DoNotOptimize(u);
  }
}
BENCHMARK(BM_TransportSolve)->Arg(256)->Arg(2048);

void BM_SemigroupNorm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    double norm = semigroup_norm(Alpha(0.5), 1.0, n);
    benchmark::DoNotOptimize(norm);
  }
}
BENCHMARK(BM_SemigroupNorm)->Arg(64)->Arg(128);

void BM_DiscreteAccretivity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    double bound = discrete_accretivity(Alpha(0.5), n);
    benchmark::DoNotOptimize(bound);
  }
}
BENCHMARK(BM_DiscreteAccretivity)->Arg(64)->Arg(128);

void BM_EllipticDtn(benchmark::State& state) {
  for (auto _ : state) {
    MOperatorMat m = m_dirichlet(MDirichletKind::dtn);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_EllipticDtn);

}  // namespace

BENCHMARK_MAIN();
