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

#include "schmidtcert/games.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace schmidtcert {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void check_distribution(const std::vector<double>& p, const char* name) {
  require(!p.empty(), std::string(name) + ": distribution must be nonempty");
  double sum = 0.0;
  for (double v : p) {
    require(std::isfinite(v) && v >= 0.0, std::string(name) + ": probabilities must be nonnegative");
    sum += v;
  }
  require(std::abs(sum - 1.0) <= 1e-12, std::string(name) + ": probabilities must sum to 1");
}

void check_payoff_shape(const PayoffTable& payoff, int na, int nb, int nx, int ny) {
  require(payoff.outcomes_a == na && payoff.outcomes_b == nb && payoff.inputs_x == nx &&
              payoff.inputs_y == ny,
          "payoff table shape does not match the game");
  require(payoff.values.size() ==
              static_cast<std::size_t>(na) * nb * nx * ny,
          "payoff table storage does not match its shape");
  for (double v : payoff.values)
    require(std::isfinite(v), "payoff values must be finite");
}

double average_payoff_impl(const PayoffTable& payoff, const std::vector<double>& px,
                           const std::vector<double>& qy, const CorrelationTable& table) {
  require(table.outcomes_a() == payoff.outcomes_a && table.outcomes_b() == payoff.outcomes_b &&
              table.inputs_x() == payoff.inputs_x && table.inputs_y() == payoff.inputs_y,
          "average_payoff: correlation table shape does not match the game");
  double total = 0.0;
  for (int x = 0; x < payoff.inputs_x; ++x)
    for (int y = 0; y < payoff.inputs_y; ++y) {
      const double weight = px[x] * qy[y];
      for (int a = 0; a < payoff.outcomes_a; ++a)
        for (int b = 0; b < payoff.outcomes_b; ++b)
          total += payoff.at(a, b, x, y) * table.at(a, b, x, y) * weight;
    }
  return total;
}

ComplexVector embedded_qubit(int dim, Complex c0, Complex c1) {
  ComplexVector v = ComplexVector::Zero(dim);
  v[0] = c0;
  v[1] = c1;
  return v / v.norm();
}

Povm three_outcome_embedded(const ComplexVector& first, const ComplexVector& second,
                            FactorSpace space) {
  const int n = space.total_dimension();
  ComplexMatrix p0 = projector(first);
  ComplexMatrix p1 = projector(second);
  ComplexMatrix rest = identity(n) - p0 - p1;
  std::vector<HermitianOperator> elements;
  elements.emplace_back(std::move(p0), space);
  elements.emplace_back(std::move(p1), space);
  elements.emplace_back(std::move(rest), space);
  return Povm(std::move(elements));
}

}  // namespace

PayoffTable PayoffTable::zeros(int na, int nb, int nx, int ny) {
  PayoffTable t;
  t.outcomes_a = na;
  t.outcomes_b = nb;
  t.inputs_x = nx;
  t.inputs_y = ny;
  t.values.assign(static_cast<std::size_t>(na) * nb * nx * ny, 0.0);
  return t;
}

double& PayoffTable::at(int a, int b, int x, int y) {
  return values[((static_cast<std::size_t>(a) * outcomes_b + b) * inputs_x + x) * inputs_y + y];
}

double PayoffTable::at(int a, int b, int x, int y) const {
  return values[((static_cast<std::size_t>(a) * outcomes_b + b) * inputs_x + x) * inputs_y + y];
}

CorrelationTable::CorrelationTable(int na, int nb, int nx, int ny,
                                   std::vector<double> probabilities)
    : na_(na), nb_(nb), nx_(nx), ny_(ny), p_(std::move(probabilities)) {
  require(na_ > 0 && nb_ > 0 && nx_ > 0 && ny_ > 0, "CorrelationTable: empty shape");
  require(p_.size() == static_cast<std::size_t>(na_) * nb_ * nx_ * ny_,
          "CorrelationTable: storage does not match the shape");
  for (int x = 0; x < nx_; ++x)
    for (int y = 0; y < ny_; ++y) {
      double sum = 0.0;
      for (int a = 0; a < na_; ++a)
        for (int b = 0; b < nb_; ++b) {
          const double v = at(a, b, x, y);
          require(std::isfinite(v) && v >= -1e-10 && v <= 1.0 + 1e-10,
                  "CorrelationTable: probability out of range");
          sum += v;
        }
      require(std::abs(sum - 1.0) <= 1e-9,
              "CorrelationTable: probabilities must sum to 1 for every input pair");
    }
}

double CorrelationTable::at(int a, int b, int x, int y) const {
  return p_[((static_cast<std::size_t>(a) * nb_ + b) * nx_ + x) * ny_ + y];
}

BellGame::BellGame(std::vector<Povm> measurements_a, std::vector<Povm> measurements_b,
                   std::vector<double> p_x, std::vector<double> q_y, PayoffTable payoff)
    : measurements_a_(std::move(measurements_a)),
      measurements_b_(std::move(measurements_b)),
      p_x_(std::move(p_x)),
      q_y_(std::move(q_y)),
      payoff_(std::move(payoff)) {
  require(!measurements_a_.empty() && !measurements_b_.empty(),
          "BellGame: measurement lists must be nonempty");
  check_distribution(p_x_, "BellGame pX");
  check_distribution(q_y_, "BellGame qY");
  require(p_x_.size() == measurements_a_.size() && q_y_.size() == measurements_b_.size(),
          "BellGame: distribution lengths must match the input sets");
  for (const Povm& m : measurements_a_)
    require(m.outcomes() == outcomes_a() && m.dimension() == measurements_a_.front().dimension(),
            "BellGame: Alice's POVMs must share outcome count and dimension");
  for (const Povm& m : measurements_b_)
    require(m.outcomes() == outcomes_b() && m.dimension() == measurements_b_.front().dimension(),
            "BellGame: Bob's POVMs must share outcome count and dimension");
  check_payoff_shape(payoff_, outcomes_a(), outcomes_b(), inputs_x(), inputs_y());
}

SemiquantumGame::SemiquantumGame(std::vector<DensityOperator> input_states_a,
                                 std::vector<DensityOperator> input_states_b,
                                 std::vector<double> p_x, std::vector<double> q_y,
                                 PayoffTable payoff)
    : input_states_a_(std::move(input_states_a)),
      input_states_b_(std::move(input_states_b)),
      p_x_(std::move(p_x)),
      q_y_(std::move(q_y)),
      payoff_(std::move(payoff)) {
  require(!input_states_a_.empty() && !input_states_b_.empty(),
          "SemiquantumGame: input-state lists must be nonempty");
  check_distribution(p_x_, "SemiquantumGame pX");
  check_distribution(q_y_, "SemiquantumGame qY");
  require(p_x_.size() == input_states_a_.size() && q_y_.size() == input_states_b_.size(),
          "SemiquantumGame: distribution lengths must match the input sets");
  for (const DensityOperator& s : input_states_a_)
    require(s.dimension() == input_states_a_.front().dimension(),
            "SemiquantumGame: Alice's inputs must share one dimension");
  for (const DensityOperator& s : input_states_b_)
    require(s.dimension() == input_states_b_.front().dimension(),
            "SemiquantumGame: Bob's inputs must share one dimension");
  check_payoff_shape(payoff_, payoff_.outcomes_a, payoff_.outcomes_b, inputs_x(), inputs_y());
  require(payoff_.outcomes_a > 0 && payoff_.outcomes_b > 0,
          "SemiquantumGame: outcome arities must be positive");
}

CorrelationTable bell_correlation(const BellGame& game, const DensityOperator& rho) {
  const int da = game.measurements_a().front().dimension();
  const int db = game.measurements_b().front().dimension();
  require(rho.dimension() == da * db,
          "bell_correlation: state dimension does not match the measurements");

  const int na = game.outcomes_a();
  const int nb = game.outcomes_b();
  const int nx = game.inputs_x();
  const int ny = game.inputs_y();
  std::vector<double> p(static_cast<std::size_t>(na) * nb * nx * ny, 0.0);
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b)
      for (int x = 0; x < nx; ++x)
        for (int y = 0; y < ny; ++y) {
          ComplexMatrix joint = kron(game.measurements_a()[x].element(a).matrix(),
                                     game.measurements_b()[y].element(b).matrix());
          p[((static_cast<std::size_t>(a) * nb + b) * nx + x) * ny + y] =
              real_trace_product(joint, rho.matrix());
        }
  return CorrelationTable(na, nb, nx, ny, std::move(p));
}

double average_payoff(const BellGame& game, const CorrelationTable& correlation) {
  return average_payoff_impl(game.payoff(), game.p_x(), game.q_y(), correlation);
}

double average_payoff(const SemiquantumGame& game, const CorrelationTable& correlation) {
  return average_payoff_impl(game.payoff(), game.p_x(), game.q_y(), correlation);
}

CorrelationTable semiquantum_correlation(const SemiquantumGame& game,
                                         const DensityOperator& rho,
                                         const Povm& measurement_a,
                                         const Povm& measurement_b) {
  require(rho.space().factor_count() == 2,
          "semiquantum_correlation: the shared state must be bipartite");
  const int da0 = game.input_states_a().front().dimension();
  const int da = rho.space().dims[0];
  const int db = rho.space().dims[1];
  const int db0 = game.input_states_b().front().dimension();
  require(measurement_a.space() == FactorSpace::bipartite(da0, da),
          "semiquantum_correlation: Alice's POVM must act on the (A0, A) pair");
  require(measurement_b.space() == FactorSpace::bipartite(db, db0),
          "semiquantum_correlation: Bob's POVM must act on the (B, B0) pair");
  require(measurement_a.outcomes() == game.outcomes_a() &&
              measurement_b.outcomes() == game.outcomes_b(),
          "semiquantum_correlation: POVM outcome counts must match the game arities");
  const long total = static_cast<long>(da0) * da * db * db0;
  require(total <= kMaxMaterializedDimension,
          "semiquantum_correlation: total dimension " + std::to_string(total) +
              " exceeds the materialization limit");

  const int na = game.outcomes_a();
  const int nb = game.outcomes_b();
  const int nx = game.inputs_x();
  const int ny = game.inputs_y();

  std::vector<ComplexMatrix> joint;
  joint.reserve(static_cast<std::size_t>(na) * nb);
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b)
      joint.push_back(kron(measurement_a.element(a).matrix(), measurement_b.element(b).matrix()));

  std::vector<double> p(static_cast<std::size_t>(na) * nb * nx * ny, 0.0);
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y) {
      ComplexMatrix state = kron(kron(game.input_states_a()[x].matrix(), rho.matrix()),
                                 game.input_states_b()[y].matrix());
      for (int a = 0; a < na; ++a)
        for (int b = 0; b < nb; ++b)
          p[((static_cast<std::size_t>(a) * nb + b) * nx + x) * ny + y] =
              real_trace_product(joint[static_cast<std::size_t>(a) * nb + b], state);
    }
  return CorrelationTable(na, nb, nx, ny, std::move(p));
}

Povm bell_projector_measurement(int d) {
  if (d < 1) throw std::invalid_argument("bell_projector_measurement: d must be >= 1");
  const FactorSpace space = FactorSpace::bipartite(d, d);
  ComplexMatrix p = max_entangled_projector(d);
  ComplexMatrix rest = identity(d * d) - p;
  std::vector<HermitianOperator> elements;
  elements.emplace_back(std::move(p), space);
  elements.emplace_back(std::move(rest), space);
  return Povm(std::move(elements));
}

SemiquantumGame game_from_witness(const GammaDecomposition& dec,
                                  const std::vector<double>& p_x,
                                  const std::vector<double>& q_y) {
  const int nx = dec.left().size();
  const int ny = dec.right().size();
  require(static_cast<int>(p_x.size()) == nx && static_cast<int>(q_y.size()) == ny,
          "game_from_witness: distribution lengths must match the ensembles");

  std::vector<DensityOperator> inputs_a;
  inputs_a.reserve(nx);
  for (int x = 0; x < nx; ++x)
    inputs_a.emplace_back(dec.left().state(x).matrix().transpose(),
                          FactorSpace::single(dec.left().dimension()));
  std::vector<DensityOperator> inputs_b;
  inputs_b.reserve(ny);
  for (int y = 0; y < ny; ++y)
    inputs_b.emplace_back(dec.right().state(y).matrix().transpose(),
                          FactorSpace::single(dec.right().dimension()));

  PayoffTable payoff = PayoffTable::zeros(2, 2, nx, ny);
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y) {
      const double g = dec.gamma()(x, y);
      if (g == 0.0) continue;
      require(p_x[x] > 0.0 && q_y[y] > 0.0,
              "game_from_witness: zero-probability input with nonzero gamma");
      payoff.at(0, 0, x, y) = g / (p_x[x] * q_y[y]);
    }
  return SemiquantumGame(std::move(inputs_a), std::move(inputs_b), p_x, q_y,
                         std::move(payoff));
}

SemiquantumGame game_from_witness(const GammaDecomposition& dec) {
  std::vector<double> px(dec.left().size(), 1.0 / dec.left().size());
  std::vector<double> qy(dec.right().size(), 1.0 / dec.right().size());
  return game_from_witness(dec, px, qy);
}

BellGame chsh_counterexample_game() {
  const int dim = CounterexampleFamily::kLocalDim;
  const FactorSpace space = FactorSpace::single(dim);
  const double r2 = std::sqrt(2.0);
  const double np = std::sqrt(4.0 + 2.0 * r2);
  const double nm = std::sqrt(4.0 - 2.0 * r2);

  std::vector<Povm> ma;
  ma.push_back(three_outcome_embedded(embedded_qubit(dim, 1.0, 0.0),
                                      embedded_qubit(dim, 0.0, 1.0), space));
  ma.push_back(three_outcome_embedded(embedded_qubit(dim, 1.0 / r2, 1.0 / r2),
                                      embedded_qubit(dim, 1.0 / r2, -1.0 / r2), space));

  std::vector<Povm> mb;
  mb.push_back(three_outcome_embedded(embedded_qubit(dim, (1.0 + r2) / np, 1.0 / np),
                                      embedded_qubit(dim, (1.0 - r2) / nm, 1.0 / nm), space));
  mb.push_back(three_outcome_embedded(embedded_qubit(dim, (1.0 + r2) / np, -1.0 / np),
                                      embedded_qubit(dim, (1.0 - r2) / nm, -1.0 / nm), space));

  const std::vector<double> half{0.5, 0.5};
  PayoffTable payoff = PayoffTable::zeros(3, 3, 2, 2);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          const double score = ((a ^ b) == (x & y)) ? 1.0 : -1.0;
          payoff.at(a, b, x, y) = score / (half[x] * half[y]);
        }
  return BellGame(std::move(ma), std::move(mb), half, half, std::move(payoff));
}

}  // namespace schmidtcert
