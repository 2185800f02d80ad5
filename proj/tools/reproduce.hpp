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
#include <filesystem>

namespace schmidtcert::cli {

struct ReproduceOptions {
  std::uint64_t seed = 0;
  int trials = 1000;
  std::filesystem::path out_dir;
};

/// Runs the reference-value checklist, writes report.json plus the scan CSVs
/// into out_dir, and prints one pass/fail line per check. Returns 0 when all
/// checks pass, 2 otherwise.
int run_reproduce(const ReproduceOptions& options);

}  // namespace schmidtcert::cli
