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

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "schmidtcert/certify.hpp"
#include "schmidtcert/decompose.hpp"
#include "schmidtcert/games.hpp"
#include "schmidtcert/qlinalg.hpp"
#include "schmidtcert/schmidt.hpp"

namespace schmidtcert {

// Operator files use the schema
//   { "dims": [d1, d2, ...], "re": [[row-major reals]], "im": [[...]] }
// with the matrix side equal to the product of dims. Readers reject
// non-finite values. Witness files add { "r": int }. All writers are atomic
// (write to a temporary file in the target directory, then rename).

void save_operator(const HermitianOperator& op, const std::filesystem::path& path);
HermitianOperator load_operator(const std::filesystem::path& path);

void save_witness(const WitnessOperator& w, const std::filesystem::path& path);
WitnessOperator load_witness(const std::filesystem::path& path);

void save_density(const DensityOperator& rho, const std::filesystem::path& path);
DensityOperator load_density(const std::filesystem::path& path);

// { "gamma": [[reals]], "left": [operator...], "right": [operator...],
//   "residual": real }
void save_decomposition(const GammaDecomposition& dec, const std::filesystem::path& path);
// The file does not carry the target; it is revalidated against `target`.
GammaDecomposition load_decomposition(const std::filesystem::path& path,
                                      const WitnessOperator& target);

// { "type": "bell" | "semiquantum", "inputsA": n, "inputsB": n, "pX": [...],
//   "qY": [...], "payoff": [[[[reals]]]] indexed [a][b][x][y], and either
//   "measurementsA"/"measurementsB" (lists of operator lists) or
//   "inputStatesA"/"inputStatesB" (operator lists) }
void save_game(const BellGame& game, const std::filesystem::path& path);
void save_game(const SemiquantumGame& game, const std::filesystem::path& path);
std::variant<BellGame, SemiquantumGame> load_game(const std::filesystem::path& path);

// CSV with header x,y,a,b,p; 12 significant digits, C locale.
void save_correlation_csv(const CorrelationTable& table, const std::filesystem::path& path);

void save_report(const CertificationReport& report, const std::filesystem::path& path);

/// One row of a scan CSV (columns lambda,value,quantity).
struct ScanRow {
  double lambda = 0.0;
  double value = 0.0;
  std::string quantity;
};
void save_scan_csv(const std::vector<ScanRow>& rows, const std::filesystem::path& path);

/// Format a double with 12 significant digits, locale independent.
std::string format_value(double v);

/// Atomic text write used by every writer.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace schmidtcert
