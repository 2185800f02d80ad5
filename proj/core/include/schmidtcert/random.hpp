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

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "schmidtcert/qlinalg.hpp"

namespace schmidtcert {

/// Deterministic RNG stream addressed by (seed, stream index). Every
/// randomized routine takes an explicit stream so results are reproducible
/// regardless of scheduling.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  double uniform();   // [0, 1)
  double gaussian();  // N(0, 1)
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> unif_{0.0, 1.0};
};

/// Matrix with i.i.d. standard complex Gaussian entries.
ComplexMatrix ginibre(int rows, int cols, RngStream& rng);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase fixing).
ComplexMatrix haar_unitary(int d, RngStream& rng);

/// Haar-random pure state on the given space.
PureState haar_pure_state(FactorSpace space, RngStream& rng);

/// Full-rank random density operator (normalized Wishart).
DensityOperator random_density(FactorSpace space, RngStream& rng);

/// Random Hermitian matrix (Gaussian Hermitian ensemble, unnormalized).
HermitianOperator random_hermitian(FactorSpace space, RngStream& rng);

/// Weights from a flat Dirichlet over n slots.
std::vector<double> dirichlet_uniform(int n, RngStream& rng);

/// Two-outcome POVM {E, I - E} with E a Wishart matrix scaled to a
/// contraction (largest eigenvalue 1).
Povm random_dichotomic_povm(FactorSpace space, RngStream& rng);

}  // namespace schmidtcert
