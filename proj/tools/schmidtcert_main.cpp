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

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "reproduce.hpp"
#include "schmidtcert/certify.hpp"
#include "schmidtcert/decompose.hpp"
#include "schmidtcert/games.hpp"
#include "schmidtcert/json_io.hpp"
#include "schmidtcert/schmidt.hpp"

namespace {

using namespace schmidtcert;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;

void check_distinct_paths(const std::vector<fs::path>& inputs, const fs::path& out) {
  for (const fs::path& in : inputs)
    if (!in.empty() && fs::weakly_canonical(in) == fs::weakly_canonical(out))
      throw std::invalid_argument("output path must differ from input path " + in.string());
}

GammaDecomposition decomposition_for(const WitnessOperator& w, const fs::path& dec_path) {
  if (!dec_path.empty()) return load_decomposition(dec_path, w);
  const int da = w.space().dims[0];
  const int db = w.space().dims[1];
  return solve_gamma(w, canonical_ensemble(da), canonical_ensemble(db));
}

std::vector<double> lambda_grid(double start, double stop, int steps) {
  if (steps < 1) throw std::invalid_argument("lambda grid needs at least one step");
  if (start < 0.0 || stop > 1.0 || start > stop)
    throw std::invalid_argument("lambda grid must satisfy 0 <= start <= stop <= 1");
  std::vector<double> grid;
  if (steps == 1) {
    grid.push_back(start);
    return grid;
  }
  for (int i = 0; i < steps; ++i)
    grid.push_back(start + (stop - start) * i / (steps - 1));
  return grid;
}

int run_witness(int d, int r, const fs::path& out) {
  if (d < 1 || d > 16 || r < 1 || r > d)
    throw std::invalid_argument("witness requires 1 <= r <= d <= 16");
  if (r == d)
    std::fprintf(stderr,
                 "warning: r = d gives a positive semidefinite operator that certifies "
                 "nothing\n");
  save_witness(optimal_witness(d, r), out);
  return kExitOk;
}

int run_decompose(const fs::path& witness_path, const fs::path& out) {
  check_distinct_paths({witness_path}, out);
  WitnessOperator w = load_witness(witness_path);
  save_decomposition(decomposition_for(w, {}), out);
  return kExitOk;
}

int run_synth(const fs::path& witness_path, const fs::path& dec_path, const fs::path& out) {
  check_distinct_paths({witness_path, dec_path}, out);
  WitnessOperator w = load_witness(witness_path);
  save_game(game_from_witness(decomposition_for(w, dec_path)), out);
  return kExitOk;
}

int run_simulate(const fs::path& game_path, const fs::path& state_path, const fs::path& out) {
  check_distinct_paths({game_path, state_path}, out);
  DensityOperator rho = load_density(state_path);
  auto game = load_game(game_path);
  if (std::holds_alternative<BellGame>(game)) {
    save_correlation_csv(bell_correlation(std::get<BellGame>(game), rho), out);
    return kExitOk;
  }
  const SemiquantumGame& sq = std::get<SemiquantumGame>(game);
  if (rho.space().factor_count() != 2)
    throw std::invalid_argument("simulate: the shared state must be bipartite");
  // Honest-strategy default: Bell-projector measurements on both factor pairs.
  const Povm ma = bell_projector_measurement(rho.space().dims[0]);
  const Povm mb = bell_projector_measurement(rho.space().dims[1]);
  save_correlation_csv(semiquantum_correlation(sq, rho, ma, mb), out);
  return kExitOk;
}

int run_certify(const fs::path& state_path, const fs::path& witness_path,
                const std::string& mode, double tolerance, std::uint64_t seed,
                const fs::path& out) {
  check_distinct_paths({state_path, witness_path}, out);
  DensityOperator rho = load_density(state_path);
  WitnessOperator w = load_witness(witness_path);

  CertificationReport report;
  if (mode == "direct") {
    report = certify_schmidt_number(rho, w, CertifyMode::kDirect, nullptr, tolerance);
  } else if (mode == "compiled") {
    GammaDecomposition dec = decomposition_for(w, {});
    report = certify_schmidt_number(rho, w, CertifyMode::kCompiledGame, &dec, tolerance);
  } else {
    throw std::invalid_argument("certify: mode must be direct or compiled");
  }
  report.seed = seed;
  save_report(report, out);
  std::printf("%s\n", report.verdict.c_str());
  return kExitOk;  // a not-certified verdict is data, not an error
}

int run_chsh_scan(double start, double stop, int steps, const fs::path& out) {
  const std::vector<double> grid = lambda_grid(start, stop, steps);
  const BellGame game = chsh_counterexample_game();
  std::vector<ScanRow> rows;
  rows.reserve(grid.size());
  for (double lambda : grid) {
    const double value =
        average_payoff(game, bell_correlation(game, counterexample_state(lambda)));
    rows.push_back({lambda, value, "chsh_payoff"});
  }
  save_scan_csv(rows, out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schmidt-number certification toolkit"};
  app.require_subcommand(1);

  int d = 3;
  int r = 2;
  std::string out;
  std::string witness_path;
  std::string dec_path;
  std::string game_path;
  std::string state_path;
  std::string mode = "direct";
  double tolerance = kCertifyTol;
  double lambda_start = 0.0;
  double lambda_stop = 1.0;
  int lambda_steps = 101;
  int trials = 1000;
  std::uint64_t seed = 0;

  CLI::App* witness = app.add_subcommand("witness", "Write an optimal witness operator");
  witness->add_option("--d", d, "Local dimension")->required();
  witness->add_option("--r", r, "Schmidt-rank parameter")->required();
  witness->add_option("--out", out, "Output JSON path")->required();

  CLI::App* decompose = app.add_subcommand(
      "decompose", "Decompose a witness over the canonical product ensembles");
  decompose->add_option("--witness", witness_path, "Witness JSON")->required();
  decompose->add_option("--out", out, "Output JSON path")->required();

  CLI::App* synth =
      app.add_subcommand("synth", "Compile a witness into a semiquantum game");
  synth->add_option("--witness", witness_path, "Witness JSON")->required();
  synth->add_option("--decomposition", dec_path, "Optional decomposition JSON");
  synth->add_option("--out", out, "Output game JSON path")->required();

  CLI::App* simulate =
      app.add_subcommand("simulate", "Correlation table of a game on a state");
  simulate->add_option("--game", game_path, "Game JSON")->required();
  simulate->add_option("--state", state_path, "State JSON")->required();
  simulate->add_option("--out", out, "Output CSV path")->required();

  CLI::App* certify = app.add_subcommand("certify", "Evaluate a witness against a state");
  certify->add_option("--state", state_path, "State JSON")->required();
  certify->add_option("--witness", witness_path, "Witness JSON")->required();
  certify->add_option("--mode", mode, "direct or compiled")
      ->check(CLI::IsMember({"direct", "compiled"}));
  certify->add_option("--tolerance", tolerance, "Verdict threshold");
  certify->add_option("--seed", seed, "Seed recorded in the report");
  certify->add_option("--out", out, "Output report JSON path")->required();

  CLI::App* chsh = app.add_subcommand("chsh-scan", "CHSH payoff across a lambda grid");
  chsh->add_option("--lambda-start", lambda_start, "Grid start");
  chsh->add_option("--lambda-stop", lambda_stop, "Grid stop");
  chsh->add_option("--lambda-steps", lambda_steps, "Grid size (inclusive endpoints)");
  chsh->add_option("--out", out, "Output CSV path")->required();

  CLI::App* reproduce =
      app.add_subcommand("reproduce", "Run the reference-value checklist");
  reproduce->add_option("--seed", seed, "Seed for the randomized checks")->required();
  reproduce->add_option("--trials", trials, "Sweep trial count")
      ->check(CLI::PositiveNumber);
  reproduce->add_option("--out", out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (witness->parsed()) return run_witness(d, r, out);
    if (decompose->parsed()) return run_decompose(witness_path, out);
    if (synth->parsed()) return run_synth(witness_path, dec_path, out);
    if (simulate->parsed()) return run_simulate(game_path, state_path, out);
    if (certify->parsed())
      return run_certify(state_path, witness_path, mode, tolerance, seed, out);
    if (chsh->parsed()) return run_chsh_scan(lambda_start, lambda_stop, lambda_steps, out);
    if (reproduce->parsed())
      return schmidtcert::cli::run_reproduce({seed, trials, fs::path(out)});
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInputError;
  }
  return kExitInputError;
}
