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

#include <vector>

#include "schmidtcert/qlinalg.hpp"

namespace schmidtcert {

/// Singular values below kSchmidtRankCutoff * (largest value) are treated as
/// zero when counting Schmidt rank.
inline constexpr double kSchmidtRankCutoff = 1e-10;

/// POVM local-model bound for the two-qutrit isotropic family
/// (Barrett, Phys. Rev. A 65, 042302 (2002)). Stored, not derived; no
/// closed-form expression is available for general dimension.
inline constexpr double kQutritIsotropicPovmLhvBound = 8.0 / 27.0;

/// psi = sum_i coefficients[i] |left_i> (x) |right_i>, coefficients
/// non-increasing and above the rank cutoff, bases orthonormal.
struct SchmidtDecomposition {
  std::vector<double> coefficients;
  std::vector<ComplexVector> left_basis;
  std::vector<ComplexVector> right_basis;
  int rank = 0;
};

/// Hermitian witness with Schmidt-rank parameter r: nonnegative expectation
/// on every state of Schmidt number <= r, negative on at least one state
/// outside that set.
class WitnessOperator {
 public:
  WitnessOperator(HermitianOperator op, int r);

  const HermitianOperator& op() const { return op_; }
  const ComplexMatrix& matrix() const { return op_.matrix(); }
  const FactorSpace& space() const { return op_.space(); }
  int r() const { return r_; }

 private:
  HermitianOperator op_;
  int r_;
};

/// Isotropic family p |Phi_d+><Phi_d+| + (1-p) I/d (x) I/d.
struct IsotropicFamily {
  int d = 2;
  double p = 0.0;

  DensityOperator to_density() const;
};

/// The C^8 (x) C^8 family lambda * iso(p=0.24) + (1-lambda) |phi_2+><phi_2+|,
/// with |phi_2+> embedded on computational levels {0,1} of both sides.
struct CounterexampleFamily {
  static constexpr double kMixingP = 0.24;
  static constexpr int kLocalDim = 8;

  double lambda = 0.0;

  DensityOperator to_density() const;
};

/// Schmidt decomposition of a bipartite pure state. The reconstruction
/// matches psi up to global phase within 1e-10.
SchmidtDecomposition schmidt_decompose(const PureState& psi, BipartiteSpace space);

/// Number of singular values of the amplitude matrix above the rank cutoff.
int schmidt_rank(const PureState& psi, BipartiteSpace space);

/// The optimal witness I (x) I - (d/r) P_d on C^d (x) C^d, where P_d projects
/// onto the maximally entangled state. Requires 1 <= r <= d.
WitnessOperator optimal_witness(int d, int r);

/// Re(tr(W rho)). Throws if dimensions mismatch or the imaginary residue of
/// the trace exceeds 1e-10 (signals a non-Hermitian input).
double witness_expectation(const WitnessOperator& w, const DensityOperator& rho);

/// Largest p for which the isotropic state on C^d (x) C^d has Schmidt number
/// <= r: (r d - 1) / (d^2 - 1).
double isotropic_sn_threshold(int d, int r);

/// Largest p for which the isotropic state admits a local hidden variable
/// model under local projective measurements: (H_d - 1) / (d - 1) with H_d
/// the d-th harmonic number. Requires d >= 2.
double isotropic_lhv_threshold_projective(int d);

/// Density operator of IsotropicFamily{d, p}.
DensityOperator isotropic_state(int d, double p);

/// Density operator of CounterexampleFamily{lambda}.
DensityOperator counterexample_state(double lambda);

}  // namespace schmidtcert
