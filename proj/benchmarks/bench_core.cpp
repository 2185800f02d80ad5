// Copyright 2026 The schmidtcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "schmidtcert/certify.hpp"
#include "schmidtcert/decompose.hpp"
#include "schmidtcert/games.hpp"
#include "schmidtcert/random.hpp"
#include "schmidtcert/schmidt.hpp"

using namespace schmidtcert;

namespace {

void BM_Kron(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  RngStream rng(1);
  ComplexMatrix a = ginibre(d, d, rng);
  ComplexMatrix b = ginibre(d, d, rng);
  for (auto _ : state) {
    ComplexMatrix k = kron(a, b);
    benchmark::DoNotOptimize(k.data());
  }
}
BENCHMARK(BM_Kron)->Arg(8)->Arg(9)->Arg(64);

void BM_PartialTrace(benchmark::State& state) {
  RngStream rng(2);
  HermitianOperator op = random_hermitian(FactorSpace{{3, 3, 3, 3}}, rng);
  for (auto _ : state) {
    HermitianOperator reduced = partial_trace(op, {0, 3});
    benchmark::DoNotOptimize(reduced.matrix().data());
  }
}
BENCHMARK(BM_PartialTrace);

void BM_SchmidtDecompose(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  RngStream rng(3);
  PureState psi = haar_pure_state(FactorSpace::bipartite(d, d), rng);
  for (auto _ : state) {
    SchmidtDecomposition dec = schmidt_decompose(psi, {d, d});
    benchmark::DoNotOptimize(dec.rank);
  }
}
BENCHMARK(BM_SchmidtDecompose)->Arg(3)->Arg(8);

void BM_SolveGamma(benchmark::State& state) {
  WitnessOperator w = optimal_witness(3, 2);
  ProductEnsemble ens = canonical_qutrit_ensemble();
  for (auto _ : state) {
    GammaDecomposition dec = solve_gamma(w, ens, ens);
    benchmark::DoNotOptimize(dec.residual());
  }
}
BENCHMARK(BM_SolveGamma);

void BM_SemiquantumCorrelation(benchmark::State& state) {
  GammaDecomposition dec =
      solve_gamma(optimal_witness(3, 2), canonical_qutrit_ensemble(),
                  canonical_qutrit_ensemble());
  SemiquantumGame game = game_from_witness(dec);
  DensityOperator rho = isotropic_state(3, 0.7);
  const Povm ma = bell_projector_measurement(3);
  const Povm mb = bell_projector_measurement(3);
  for (auto _ : state) {
    CorrelationTable t = semiquantum_correlation(game, rho, ma, mb);
    benchmark::DoNotOptimize(t.at(0, 0, 0, 0));
  }
}
BENCHMARK(BM_SemiquantumCorrelation);

void BM_SweepTrial(benchmark::State& state) {
  GammaDecomposition dec =
      solve_gamma(optimal_witness(3, 2), canonical_qutrit_ensemble(),
                  canonical_qutrit_ensemble());
  SemiquantumGame game = game_from_witness(dec);
  SrSampler sampler{3, 2, 3, 5};
  std::uint64_t trial = 0;
  for (auto _ : state) {
    DensityOperator sigma = sample_sr_state(sampler, trial);
    RngStream rng(6, trial);
    Povm ma = random_dichotomic_povm(FactorSpace::bipartite(3, 3), rng);
    Povm mb = random_dichotomic_povm(FactorSpace::bipartite(3, 3), rng);
    benchmark::DoNotOptimize(filtered_average_payoff(game, sigma, ma, mb));
    ++trial;
  }
}
BENCHMARK(BM_SweepTrial);

void BM_ChshCurvePoint(benchmark::State& state) {
  const BellGame game = chsh_counterexample_game();
  double lambda = 0.0;
  for (auto _ : state) {
    const double value =
        average_payoff(game, bell_correlation(game, counterexample_state(lambda)));
    benchmark::DoNotOptimize(value);
    lambda = lambda < 1.0 ? lambda + 0.01 : 0.0;
  }
}
BENCHMARK(BM_ChshCurvePoint);

}  // namespace

BENCHMARK_MAIN();
