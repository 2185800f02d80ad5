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

#include <cmath>

#include "doctest.h"
#include "schmidtcert/schmidt.hpp"
#include "test_helpers.hpp"

using namespace schmidtcert;
using namespace schmidtcert::testing;

namespace {

// The rank-2 qutrit pair state with coefficients (sqrt(3)/2, 1/2).
PureState rank2_qutrit_example() {
  ComplexVector amp(9);
  amp << 0.5, 0.25, 0.25, 0.5, 0.0, 0.0, 0.5, -0.25, -0.25;
  return PureState(amp, FactorSpace::bipartite(3, 3));
}

ComplexVector reconstruct_state(const SchmidtDecomposition& dec, int da, int db) {
  ComplexVector psi = ComplexVector::Zero(static_cast<Eigen::Index>(da) * db);
  for (int k = 0; k < dec.rank; ++k)
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < db; ++j)
        psi[i * db + j] += dec.coefficients[k] * dec.left_basis[k](i) * dec.right_basis[k](j);
  return psi;
}

}  // namespace

TEST_CASE("schmidt decomposition of product and maximally entangled states") {
  ComplexVector zero_zero = ComplexVector::Zero(4);
  zero_zero[0] = 1.0;
  SchmidtDecomposition dec =
      schmidt_decompose(PureState(zero_zero, FactorSpace::bipartite(2, 2)), {2, 2});
  CHECK(dec.rank == 1);
  CHECK(dec.coefficients[0] == doctest::Approx(1.0).epsilon(1e-12));

  SchmidtDecomposition phi3 = schmidt_decompose(max_entangled(3), {3, 3});
  CHECK(phi3.rank == 3);
  for (double c : phi3.coefficients)
    CHECK(std::abs(c - 1.0 / std::sqrt(3.0)) < 1e-12);
}

TEST_CASE("rank-2 qutrit example decomposes with coefficients (sqrt(3)/2, 1/2)") {
  PureState psi = rank2_qutrit_example();
  SchmidtDecomposition dec = schmidt_decompose(psi, {3, 3});
  REQUIRE(dec.rank == 2);
  CHECK(std::abs(dec.coefficients[0] - std::sqrt(3.0) / 2.0) < 1e-10);
  CHECK(std::abs(dec.coefficients[1] - 0.5) < 1e-10);

  // Reconstruction matches up to global phase; the coefficient sum rule holds.
  ComplexVector rebuilt = reconstruct_state(dec, 3, 3);
  const Complex phase = psi.amplitudes().dot(rebuilt);
  CHECK((rebuilt - (phase / std::abs(phase)) * psi.amplitudes()).norm() < 1e-10);
  double sumsq = 0.0;
  for (double c : dec.coefficients) sumsq += c * c;
  CHECK(std::abs(sumsq - 1.0) < 1e-10);

  // Orthonormal bases.
  for (int k = 0; k < dec.rank; ++k)
    for (int l = 0; l < dec.rank; ++l) {
      const Complex gl = dec.left_basis[k].dot(dec.left_basis[l]);
      const Complex gr = dec.right_basis[k].dot(dec.right_basis[l]);
      CHECK(std::abs(gl - (k == l ? 1.0 : 0.0)) < 1e-10);
      CHECK(std::abs(gr - (k == l ? 1.0 : 0.0)) < 1e-10);
    }
}

TEST_CASE("schmidt_rank on canonical cases") {
  CHECK(schmidt_rank(max_entangled(2), {2, 2}) == 2);

  RngStream rng(21);
  ComplexVector a = haar_pure_state(FactorSpace::single(3), rng).amplitudes();
  ComplexVector b = haar_pure_state(FactorSpace::single(3), rng).amplitudes();
  ComplexVector prod(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) prod[i * 3 + j] = a(i) * b(j);
  CHECK(schmidt_rank(PureState(prod, FactorSpace::bipartite(3, 3)), {3, 3}) == 1);

  // Two-level maximally entangled state embedded in C^8 x C^8.
  ComplexVector embedded = ComplexVector::Zero(64);
  embedded[0] = embedded[9] = 1.0 / std::sqrt(2.0);
  PureState psi(embedded, FactorSpace::bipartite(8, 8));
  CHECK(schmidt_rank(psi, {8, 8}) == 2);
  ComplexMatrix amp(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) amp(i, j) = embedded[i * 8 + j];
  CHECK(gram_rank(amp) == 2);
}

TEST_CASE("schmidt_rank matches the Gaussian-elimination oracle on planted ranks") {
  RngStream rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const int rank = 1 + static_cast<int>(rng.uniform() * 4.0);
    PureState psi = planted_rank_state(4, rank, rng);
    ComplexMatrix amp(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) amp(i, j) = psi.amplitudes()[i * 4 + j];
    CHECK(schmidt_rank(psi, {4, 4}) == rank);
    CHECK(gaussian_rank(amp) == rank);
  }
}

TEST_CASE("optimal witness structure") {
  WitnessOperator w32 = optimal_witness(3, 2);
  CHECK(max_abs(w32.matrix() - (identity(9) - 1.5 * max_entangled_projector(3))) < 1e-15);
  CHECK(w32.r() == 2);

  WitnessOperator w82 = optimal_witness(8, 2);
  CHECK(max_abs(w82.matrix() - (identity(64) - 4.0 * max_entangled_projector(8))) < 1e-15);

  for (int d : {2, 3, 5})
    for (int r = 1; r <= d; ++r) {
      const double got =
          witness_expectation(optimal_witness(d, r), max_entangled(d).to_density());
      CHECK(std::abs(got - (1.0 - static_cast<double>(d) / r)) < 1e-12);
    }

  CHECK_THROWS_AS((void)optimal_witness(3, 0), std::invalid_argument);
  CHECK_THROWS_AS((void)optimal_witness(3, 4), std::invalid_argument);
}

TEST_CASE("witness expectation on the isotropic family follows (5 - 8p) / 6") {
  WitnessOperator w = optimal_witness(3, 2);
  for (int i = 0; i <= 100; ++i) {
    const double p = i / 100.0;
    const double expected = (5.0 - 8.0 * p) / 6.0;
    CHECK(std::abs(witness_expectation(w, isotropic_state(3, p)) - expected) < 1e-12);
  }
  // Maximally mixed input: 1 - 1/(d r) >= 0.
  for (int d : {2, 3, 4})
    for (int r = 1; r <= d; ++r) {
      const double got = witness_expectation(optimal_witness(d, r), isotropic_state(d, 0.0));
      CHECK(std::abs(got - (1.0 - 1.0 / (static_cast<double>(d) * r))) < 1e-12);
    }
}

TEST_CASE("witness expectation rejects mismatched dimensions") {
  CHECK_THROWS_AS(
      (void)witness_expectation(optimal_witness(3, 2), max_entangled(2).to_density()),
      std::invalid_argument);
}

TEST_CASE("isotropic Schmidt-number thresholds") {
  CHECK(isotropic_sn_threshold(3, 1) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(isotropic_sn_threshold(3, 2) == doctest::Approx(0.625).epsilon(1e-15));
  CHECK(isotropic_sn_threshold(3, 3) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(isotropic_sn_threshold(8, 2) - 15.0 / 63.0) < 1e-15);
  CHECK(std::abs(isotropic_sn_threshold(8, 3) - 23.0 / 63.0) < 1e-15);

  for (int d : {2, 3, 8, 16}) {
    CHECK(std::abs(isotropic_sn_threshold(d, 1) - 1.0 / (d + 1.0)) < 1e-15);
    for (int r = 2; r <= d; ++r)
      CHECK(isotropic_sn_threshold(d, r) > isotropic_sn_threshold(d, r - 1));
  }
  CHECK_THROWS_AS((void)isotropic_sn_threshold(3, 4), std::invalid_argument);
}

TEST_CASE("projective LHV threshold (harmonic formula)") {
  CHECK(isotropic_lhv_threshold_projective(2) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(std::abs(isotropic_lhv_threshold_projective(3) - 5.0 / 12.0) < 1e-15);
  const double d8 = isotropic_lhv_threshold_projective(8);
  CHECK(std::abs(d8 - 0.245408) < 1e-6);
  CHECK(d8 > CounterexampleFamily::kMixingP);  // p = 0.24 sits inside the local region
  CHECK_THROWS_AS((void)isotropic_lhv_threshold_projective(1), std::invalid_argument);

  // The POVM bound for the qutrit family is stored, not derived.
  CHECK(kQutritIsotropicPovmLhvBound == doctest::Approx(8.0 / 27.0).epsilon(1e-15));
}

TEST_CASE("counterexample family endpoints") {
  DensityOperator at_zero = counterexample_state(0.0);
  ComplexVector phi2 = ComplexVector::Zero(64);
  phi2[0] = phi2[9] = 1.0 / std::sqrt(2.0);
  CHECK(max_abs(at_zero.matrix() - projector(phi2)) < 1e-15);

  DensityOperator at_one = counterexample_state(1.0);
  CHECK(max_abs(at_one.matrix() - isotropic_state(8, 0.24).matrix()) < 1e-15);

  DensityOperator mid = counterexample_state(0.5);
  CHECK(std::abs(mid.op().trace() - 1.0) < 1e-12);
  CHECK(min_eigenvalue(mid.matrix()) > -1e-12);

  CHECK_THROWS_AS((void)counterexample_state(-0.1), std::invalid_argument);
  CHECK_THROWS_AS((void)counterexample_state(1.1), std::invalid_argument);
}

TEST_CASE("witness curve on the counterexample family is -0.0075 lambda") {
  WitnessOperator w = optimal_witness(8, 2);
  CHECK(std::abs(witness_expectation(w, counterexample_state(0.0))) < 1e-10);
  for (double lambda : {0.01, 0.1, 0.5, 1.0}) {
    const double value = witness_expectation(w, counterexample_state(lambda));
    CHECK(value < 0.0);
    CHECK(std::abs(value - (-0.0075 * lambda)) < 1e-10);
  }
}
