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

#include "schmidtcert/decompose.hpp"
#include "schmidtcert/qlinalg.hpp"
#include "schmidtcert/schmidt.hpp"

namespace schmidtcert {

/// Four-factor tensors are materialized only up to this total dimension;
/// beyond it the analytic Bell-projector reduction must be used instead.
inline constexpr int kMaxMaterializedDimension = 10000;

/// Payoff values J(a, b, x, y). The average payoff weights these with
/// p(a,b|x,y) p(x) q(y), so constructions that want input-weight-free
/// functionals store J = score / (p(x) q(y)).
struct PayoffTable {
  int outcomes_a = 0;
  int outcomes_b = 0;
  int inputs_x = 0;
  int inputs_y = 0;
  std::vector<double> values;

  static PayoffTable zeros(int na, int nb, int nx, int ny);
  double& at(int a, int b, int x, int y);
  double at(int a, int b, int x, int y) const;
};

/// Born-rule probabilities p(a, b | x, y). Entries lie in [-1e-10, 1+1e-10]
/// and sum to 1 within 1e-9 for every input pair.
class CorrelationTable {
 public:
  CorrelationTable(int na, int nb, int nx, int ny, std::vector<double> probabilities);

  int outcomes_a() const { return na_; }
  int outcomes_b() const { return nb_; }
  int inputs_x() const { return nx_; }
  int inputs_y() const { return ny_; }
  double at(int a, int b, int x, int y) const;

 private:
  int na_, nb_, nx_, ny_;
  std::vector<double> p_;
};

/// Classical-input game: per-input local POVMs, input distributions, payoff.
class BellGame {
 public:
  BellGame(std::vector<Povm> measurements_a, std::vector<Povm> measurements_b,
           std::vector<double> p_x, std::vector<double> q_y, PayoffTable payoff);

  const std::vector<Povm>& measurements_a() const { return measurements_a_; }
  const std::vector<Povm>& measurements_b() const { return measurements_b_; }
  const std::vector<double>& p_x() const { return p_x_; }
  const std::vector<double>& q_y() const { return q_y_; }
  const PayoffTable& payoff() const { return payoff_; }
  int inputs_x() const { return static_cast<int>(measurements_a_.size()); }
  int inputs_y() const { return static_cast<int>(measurements_b_.size()); }
  int outcomes_a() const { return measurements_a_.front().outcomes(); }
  int outcomes_b() const { return measurements_b_.front().outcomes(); }

 private:
  std::vector<Povm> measurements_a_;
  std::vector<Povm> measurements_b_;
  std::vector<double> p_x_;
  std::vector<double> q_y_;
  PayoffTable payoff_;
};

/// Quantum-input game: trusted input ensembles on the auxiliary systems
/// A0 and B0, input distributions, payoff. The measurements are not part of
/// the game; they are the untrusted devices.
class SemiquantumGame {
 public:
  SemiquantumGame(std::vector<DensityOperator> input_states_a,
                  std::vector<DensityOperator> input_states_b, std::vector<double> p_x,
                  std::vector<double> q_y, PayoffTable payoff);

  const std::vector<DensityOperator>& input_states_a() const { return input_states_a_; }
  const std::vector<DensityOperator>& input_states_b() const { return input_states_b_; }
  const std::vector<double>& p_x() const { return p_x_; }
  const std::vector<double>& q_y() const { return q_y_; }
  const PayoffTable& payoff() const { return payoff_; }
  int inputs_x() const { return static_cast<int>(input_states_a_.size()); }
  int inputs_y() const { return static_cast<int>(input_states_b_.size()); }
  int outcomes_a() const { return payoff_.outcomes_a; }
  int outcomes_b() const { return payoff_.outcomes_b; }

 private:
  std::vector<DensityOperator> input_states_a_;
  std::vector<DensityOperator> input_states_b_;
  std::vector<double> p_x_;
  std::vector<double> q_y_;
  PayoffTable payoff_;
};

/// p(a,b|x,y) = tr[(M_a|x (x) N_b|y) rho].
CorrelationTable bell_correlation(const BellGame& game, const DensityOperator& rho);

/// Average payoff sum J(a,b,x,y) p(a,b|x,y) p(x) q(y).
double average_payoff(const BellGame& game, const CorrelationTable& correlation);
double average_payoff(const SemiquantumGame& game, const CorrelationTable& correlation);

/// p(a,b|psi^x, phi^y) = tr[(M_a (x) N_b)(psi^x (x) rho (x) phi^y)] on the
/// ordered factors A0 (x) A (x) B (x) B0. measurement_a acts on (A0, A),
/// measurement_b on (B, B0). Materializes the four-factor tensors; throws
/// when the total dimension exceeds kMaxMaterializedDimension.
CorrelationTable semiquantum_correlation(const SemiquantumGame& game,
                                         const DensityOperator& rho,
                                         const Povm& measurement_a,
                                         const Povm& measurement_b);

/// Two-outcome measurement {P, I - P} with P the projector onto the
/// maximally entangled state of a (d, d) factor pair. Outcome 0 is the
/// projector click.
Povm bell_projector_measurement(int d);

/// Compile a witness decomposition into a semiquantum game: input states are
/// the transposed ensemble members, and the payoff is gamma(x,y) / (p(x)
/// q(y)) on outcome pair (0, 0), zero elsewhere. Throws when an input with
/// nonzero gamma has zero probability.
SemiquantumGame game_from_witness(const GammaDecomposition& dec,
                                  const std::vector<double>& p_x,
                                  const std::vector<double>& q_y);

/// game_from_witness with uniform input distributions.
SemiquantumGame game_from_witness(const GammaDecomposition& dec);

/// The two-input CHSH game on C^8 (x) C^8 with three-outcome projective
/// measurements confined to the first two levels: outcome scores are +1 when
/// a xor b = xy and -1 when a xor b = not(xy) for a, b in {0, 1}, zero when
/// either side lands in the residual outcome 2. Inputs are uniform and the
/// stored payoff absorbs the input weights, so average_payoff returns the
/// standard CHSH functional (classical bound 2, quantum maximum 2 sqrt(2)).
BellGame chsh_counterexample_game();

}  // namespace schmidtcert
