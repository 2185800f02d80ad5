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

#include "reproduce.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"
#include "schmidtcert/certify.hpp"
#include "schmidtcert/decompose.hpp"
#include "schmidtcert/games.hpp"
#include "schmidtcert/json_io.hpp"
#include "schmidtcert/qlinalg.hpp"
#include "schmidtcert/random.hpp"
#include "schmidtcert/schmidt.hpp"

namespace schmidtcert::cli {

namespace {

using nlohmann::json;

// Reference coefficient table for the d=3 optimal-witness decomposition as
// printed in the construction literature. The exact solver result is
// authoritative when the two disagree; deviations are logged in the report.
constexpr double kQ = 0.25;
constexpr double kReferenceGamma[9][9] = {
    {0.5, 1, 1, kQ, kQ, 0, -kQ, -kQ, 0},
    {1, 0.5, 1, kQ, 0, kQ, -kQ, 0, -kQ},
    {1, 1, 0.5, 0, kQ, kQ, 0, -kQ, -kQ},
    {kQ, kQ, 0, -kQ, 0, 0, 0, 0, 0},
    {kQ, 0, kQ, 0, -kQ, 0, 0, 0, 0},
    {0, kQ, kQ, 0, 0, -kQ, 0, 0, 0},
    {-kQ, -kQ, 0, 0, 0, 0, kQ, 0, 0},
    {-kQ, 0, -kQ, 0, 0, 0, 0, kQ, 0},
    {0, -kQ, -kQ, 0, 0, 0, 0, 0, kQ},
};

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

class Checklist {
 public:
  void add(std::string name, bool passed, std::string detail) {
    std::printf("[%s] %s: %s\n", passed ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    checks_.push_back({std::move(name), passed, std::move(detail)});
    all_passed_ &= checks_.back().passed;
  }

  bool all_passed() const { return all_passed_; }
  const std::vector<Check>& checks() const { return checks_; }

 private:
  std::vector<Check> checks_;
  bool all_passed_ = true;
};

std::vector<double> linspace(double start, double stop, int steps) {
  std::vector<double> grid;
  grid.reserve(steps);
  if (steps == 1) {
    grid.push_back(start);
    return grid;
  }
  for (int i = 0; i < steps; ++i)
    grid.push_back(start + (stop - start) * i / (steps - 1));
  return grid;
}

// Root of the affine interpolation through the first sign change.
double crossing_from_curve(const std::vector<double>& xs, const std::vector<double>& ys,
                           double level) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double a = ys[i - 1] - level;
    const double b = ys[i] - level;
    if ((a >= 0.0 && b < 0.0) || (a <= 0.0 && b > 0.0))
      return xs[i - 1] + (xs[i] - xs[i - 1]) * a / (a - b);
  }
  return std::nan("");
}

std::string fmt(double v) { return format_value(v); }

}  // namespace

int run_reproduce(const ReproduceOptions& options) {
  std::filesystem::create_directories(options.out_dir);
  Checklist list;
  json extras;

  // 1. Schmidt rank of the rank-2 qutrit pair state.
  {
    ComplexVector amp(9);
    amp << 0.5, 0.25, 0.25, 0.5, 0.0, 0.0, 0.5, -0.25, -0.25;
    PureState psi(amp, FactorSpace::bipartite(3, 3));
    SchmidtDecomposition dec = schmidt_decompose(psi, {3, 3});
    const bool ok = dec.rank == 2 &&
                    std::abs(dec.coefficients[0] - std::sqrt(3.0) / 2.0) <= 1e-10 &&
                    std::abs(dec.coefficients[1] - 0.5) <= 1e-10;
    list.add("schmidt_rank_example", ok,
             "rank " + std::to_string(dec.rank) + ", coefficients " +
                 fmt(dec.coefficients[0]) + ", " + fmt(dec.coefficients.size() > 1
                                                           ? dec.coefficients[1]
                                                           : 0.0));
  }

  // 2. Threshold table for the isotropic family.
  {
    const double t31 = isotropic_sn_threshold(3, 1);
    const double t32 = isotropic_sn_threshold(3, 2);
    const double t82 = isotropic_sn_threshold(8, 2);
    const double t83 = isotropic_sn_threshold(8, 3);
    const double lhv8 = isotropic_lhv_threshold_projective(8);
    const bool ok = t31 == 0.25 && t32 == 0.625 && std::abs(t82 - 0.238095) <= 1e-6 &&
                    std::abs(t83 - 0.365079) <= 1e-6 && std::abs(lhv8 - 0.245) <= 5e-4;
    list.add("isotropic_thresholds", ok,
             "sn(3,1)=" + fmt(t31) + " sn(3,2)=" + fmt(t32) + " sn(8,2)=" + fmt(t82) +
                 " sn(8,3)=" + fmt(t83) + " lhv_projective(8)=" + fmt(lhv8));
    extras["thresholdTable"] = json::array({
        json{{"d", 3}, {"r", 1}, {"p", t31}},
        json{{"d", 3}, {"r", 2}, {"p", t32}},
        json{{"d", 8}, {"r", 2}, {"p", t82}},
        json{{"d", 8}, {"r", 3}, {"p", t83}},
    });
  }

  // 3. Witness expectation curve on the two-qutrit isotropic family.
  {
    WitnessOperator w = optimal_witness(3, 2);
    const std::vector<double> grid = linspace(0.0, 1.0, 100);
    std::vector<double> values(grid.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      values[i] = witness_expectation(w, isotropic_state(3, grid[i]));
      worst = std::max(worst, std::abs(values[i] - (5.0 - 8.0 * grid[i]) / 6.0));
    }
    const double crossing = crossing_from_curve(grid, values, 0.0);
    const bool ok = worst <= 1e-12 && std::abs(crossing - 0.625) <= 1e-9;
    list.add("witness_sign_curve", ok,
             "max deviation from (5-8p)/6 = " + fmt(worst) + ", zero crossing " +
                 fmt(crossing));

    std::vector<ScanRow> rows;
    for (std::size_t i = 0; i < grid.size(); ++i)
      rows.push_back({grid[i], values[i], "witness_expectation_d3_r2"});
    save_scan_csv(rows, options.out_dir / "witness_scan.csv");
  }

  // 4. Witness curve on the counterexample family: -0.0075 lambda.
  {
    WitnessOperator w = optimal_witness(8, 2);
    double worst = 0.0;
    for (double lambda : linspace(0.0, 1.0, 21))
      worst = std::max(worst, std::abs(witness_expectation(w, counterexample_state(lambda)) +
                                       0.0075 * lambda));
    const double at_zero = witness_expectation(w, counterexample_state(0.0));
    bool strictly_negative = true;
    for (double lambda : {0.01, 0.1, 1.0})
      strictly_negative &= witness_expectation(w, counterexample_state(lambda)) < 0.0;
    const bool ok = worst <= 1e-10 && std::abs(at_zero) <= 1e-10 && strictly_negative;
    list.add("counterexample_witness_curve", ok,
             "max deviation from -0.0075*lambda = " + fmt(worst) + ", value at 0 = " +
                 fmt(at_zero));
  }

  // 5. CHSH curve on the counterexample family.
  {
    const BellGame game = chsh_counterexample_game();
    const std::vector<double> grid = linspace(0.0, 1.0, 100);
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
      values[i] =
          average_payoff(game, bell_correlation(game, counterexample_state(grid[i])));
    const double at_zero = values.front();
    const double crossing = crossing_from_curve(grid, values, 2.0);
    const bool ok = std::abs(at_zero - 2.0 * std::sqrt(2.0)) <= 1e-9 &&
                    std::abs(crossing - 0.3116) <= 1e-3;
    list.add("chsh_curve", ok,
             "value at 0 = " + fmt(at_zero) + ", local-bound crossing " + fmt(crossing));

    std::vector<ScanRow> rows;
    for (std::size_t i = 0; i < grid.size(); ++i)
      rows.push_back({grid[i], values[i], "chsh_payoff"});
    save_scan_csv(rows, options.out_dir / "chsh_scan.csv");
  }

  // 6. Gamma reconstruction plus the reference-table comparison.
  GammaDecomposition dec = solve_gamma(optimal_witness(3, 2), canonical_qutrit_ensemble(),
                                       canonical_qutrit_ensemble());
  {
    double contraction = 0.0;
    for (int x = 0; x < 9; ++x)
      for (int y = 0; y < 9; ++y)
        contraction += dec.gamma()(x, y) * dec.left().state(x).matrix()(0, 0).real() *
                       dec.right().state(y).matrix()(0, 0).real();
    const bool ok = dec.residual() <= 1e-10 && std::abs(contraction - 0.5) <= 1e-10;

    json deviations = json::array();
    double max_dev = 0.0;
    for (int x = 0; x < 9; ++x)
      for (int y = 0; y < 9; ++y) {
        const double dev = std::abs(dec.gamma()(x, y) - kReferenceGamma[x][y]);
        max_dev = std::max(max_dev, dev);
        if (dev > 1e-9)
          deviations.push_back(json{{"x", x + 1},
                                    {"y", y + 1},
                                    {"solved", dec.gamma()(x, y)},
                                    {"reference", kReferenceGamma[x][y]}});
      }
    extras["gammaReference"] = json{{"matchesReferenceTable", deviations.empty()},
                                    {"maxDeviation", max_dev},
                                    {"deviations", deviations}};
    list.add("gamma_reconstruction", ok,
             "residual " + fmt(dec.residual()) + ", <00|W|00> via gamma = " +
                 fmt(contraction) + ", reference-table deviations " +
                 std::to_string(deviations.size()) + " (logged, reconstruction is "
                 "authoritative)");
  }

  // 7. Reduction identity between the compiled game and the witness trace.
  const SemiquantumGame game = game_from_witness(dec);
  {
    WitnessOperator w = optimal_witness(3, 2);
    const Povm ma = bell_projector_measurement(3);
    const Povm mb = bell_projector_measurement(3);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      RngStream rng(options.seed, 1000 + trial);
      DensityOperator rho = random_density(FactorSpace::bipartite(3, 3), rng);
      const double payoff =
          average_payoff(game, semiquantum_correlation(game, rho, ma, mb));
      worst = std::max(worst, std::abs(payoff - witness_expectation(w, rho) / 9.0));
    }
    const double hit =
        average_payoff(game, semiquantum_correlation(game, isotropic_state(3, 0.9), ma, mb));
    const double miss =
        average_payoff(game, semiquantum_correlation(game, isotropic_state(3, 0.5), ma, mb));
    const bool ok = worst <= 1e-9 && hit < 0.0 && miss >= 0.0;
    list.add("reduction_identity", ok,
             "max |payoff - tr(W rho)/9| = " + fmt(worst) + ", iso(0.9) payoff " + fmt(hit) +
                 ", iso(0.5) payoff " + fmt(miss));
  }

  // 8. Statistical nonnegativity sweep plus a planted violator.
  {
    SrSampler sampler{3, 2, 3, options.seed};
    SweepOutcome sweep = payoff_nonnegativity_sweep(game, sampler, options.trials);
    const double violator = filtered_average_payoff(game, isotropic_state(3, 0.9),
                                                    bell_projector_measurement(3),
                                                    bell_projector_measurement(3));
    const bool ok = sweep.worst_payoff >= -1e-7 && violator < 0.0;
    list.add("payoff_nonnegativity_sweep", ok,
             std::to_string(sweep.trials) + " trials, worst payoff " +
                 fmt(sweep.worst_payoff) + " (trial " + std::to_string(sweep.worst_trial) +
                 "), planted violator " + fmt(violator));
    extras["sweep"] = json{{"trials", sweep.trials},
                           {"worstCase", sweep.worst_payoff},
                           {"worstTrial", sweep.worst_trial},
                           {"plantedViolator", violator}};
  }

  // 9. Mixture identity of the counterexample correlations.
  {
    const BellGame chsh = chsh_counterexample_game();
    double worst = 0.0;
    for (double lambda : linspace(0.0, 1.0, 20))
      worst = std::max(worst, simulation_decomposition_check(lambda, chsh));
    const double lhv8 = isotropic_lhv_threshold_projective(8);
    const bool ok = worst <= 1e-10 && CounterexampleFamily::kMixingP <= lhv8;
    list.add("mixture_identity", ok,
             "max residual " + fmt(worst) + "; local component p=0.24 <= " + fmt(lhv8) +
                 " (cited-model threshold)");
  }

  json report{{"seed", options.seed},
              {"trials", options.trials},
              {"allPassed", list.all_passed()},
              {"scopeNote", certification_scope_note()}};
  json checks = json::array();
  for (const Check& c : list.checks())
    checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  report["checks"] = checks;
  for (auto& [key, value] : extras.items()) report[key] = value;
  write_file_atomic(options.out_dir / "report.json", report.dump(2) + "\n");

  return list.all_passed() ? 0 : 2;
}

}  // namespace schmidtcert::cli
