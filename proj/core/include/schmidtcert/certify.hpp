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
#include <string>
#include <vector>

#include "schmidtcert/games.hpp"
#include "schmidtcert/qlinalg.hpp"
#include "schmidtcert/random.hpp"
#include "schmidtcert/schmidt.hpp"

namespace schmidtcert {

/// Verdict threshold for deterministic payoff evaluations.
inline constexpr double kCertifyTol = 1e-9;
/// Looser floor for randomized sweeps, absorbing accumulation over
/// 81-dimensional contractions.
inline constexpr double kSweepTol = 1e-7;

/// Samples states of Schmidt number <= r on C^d (x) C^d: convex mixtures of
/// mixture_size pure states, each with Schmidt coefficients drawn from a flat
/// Dirichlet over r slots and Haar-rotated local bases. Deterministic under
/// a fixed (seed, trial) pair.
struct SrSampler {
  int d = 2;
  int r = 1;
  int mixture_size = 1;
  std::uint64_t seed = 0;
};

/// Mixture weights and pure components of one sample.
struct SrComponents {
  std::vector<double> weights;
  std::vector<PureState> components;
};

SrComponents sample_sr_components(const SrSampler& sampler, std::uint64_t trial = 0);
DensityOperator sample_sr_state(const SrSampler& sampler, std::uint64_t trial = 0);

/// R = Tr_AB[(M (x) N)(|eta><eta| (x) I_{A0 B0})] on the (A0, B0) pair:
/// PSD, with trace bounded by the (A0, B0) dimension product.
class FilteredOperator {
 public:
  FilteredOperator(HermitianOperator op, int source_index);

  const HermitianOperator& op() const { return op_; }
  const ComplexMatrix& matrix() const { return op_.matrix(); }
  int source_index() const { return source_index_; }

 private:
  HermitianOperator op_;
  int source_index_;
};

/// Filtered operator of a pure component eta on (A, B) under the click
/// elements m_element (on (A0, A)) and n_element (on (B, B0)).
FilteredOperator filtered_operator(const PureState& eta, const HermitianOperator& m_element,
                                   const HermitianOperator& n_element, int source_index = 0);

/// Average payoff of a compiled game evaluated in the filtered order: the
/// shared state is contracted with the measurement clicks over (A, B) first,
/// then the result is paired with the quantum inputs on (A0, B0). Agrees
/// with the direct four-factor evaluation used by semiquantum_correlation.
double filtered_average_payoff(const SemiquantumGame& game, const DensityOperator& rho,
                               const Povm& measurement_a, const Povm& measurement_b);

enum class CertifyMode { kDirect, kCompiledGame };

struct CertificationReport {
  std::string witness_id;
  std::string game_id;
  double payoff = 0.0;
  double threshold = 0.0;
  bool certified = false;
  std::string verdict;  // "certified" or "not-certified"
  /// Per-input payoff contributions gamma(x,y) p(0,0|x,y), row-major over
  /// (x, y); empty for the direct mode.
  std::vector<double> per_input_contributions;
  int trials = 1;
  double worst_case = 0.0;
  std::uint64_t seed = 0;
  std::string scope_note;
};

/// Evaluate a witness against a state. Direct mode computes tr[W rho];
/// compiled mode plays the semiquantum game built from `dec` with
/// Bell-projector measurements, whose payoff equals tr[W rho] / (dA dB).
/// Above the materialization limit the compiled payoff is computed through
/// that reduction identity instead of the four-factor tensor. The verdict is
/// "certified" exactly when the payoff is below -tolerance.
CertificationReport certify_schmidt_number(const DensityOperator& rho, const WitnessOperator& w,
                                           CertifyMode mode,
                                           const GammaDecomposition* dec = nullptr,
                                           double tolerance = kCertifyTol);

struct SweepOutcome {
  double worst_payoff = 0.0;
  std::uint64_t worst_trial = 0;
  int trials = 0;
};

/// Minimum compiled-game payoff over `trials` randomized (state, POVM)
/// pairs: states from the sampler, dichotomic POVMs drawn per trial on the
/// (A0, A) and (B, B0) factor pairs. Report-only; the caller compares the
/// worst case against -kSweepTol.
SweepOutcome payoff_nonnegativity_sweep(const SemiquantumGame& game, const SrSampler& sampler,
                                        int trials);

/// Max-norm residual between the correlation of the counterexample state at
/// lambda and the lambda-mixture of its component correlations (the isotropic
/// part and the embedded two-qubit part) under the given game.
double simulation_decomposition_check(double lambda, const BellGame& game);

/// Fixed wording attached to reports: the sweep is statistical evidence, not
/// the universal quantification, and the local-model component is consumed as
/// a cited threshold ("cited-model"), not constructed.
std::string certification_scope_note();

}  // namespace schmidtcert
