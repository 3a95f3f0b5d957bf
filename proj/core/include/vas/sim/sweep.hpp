// Copyright 2026 The vaslab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "vas/sim/config.hpp"

namespace vas::sim {

// A sweep file is JSON: {"base": <config object>, "grid": {field: [values]},
// "seeds": [ints]}. Cells are the Cartesian product of grid values times
// seeds, each an independent run of the base config with those fields
// replaced.
struct SweepCell {
  std::string name;  // deterministic, filesystem-safe
  std::vector<std::pair<std::string, std::string>> params;  // field -> value
  std::uint64_t seed = 0;
  SimConfig config;
};

struct SweepSpec {
  std::vector<SweepCell> cells;
  std::vector<std::string> grid_fields;  // in grid declaration order
};

SweepSpec parse_sweep_json(const std::string& text, const std::string& origin);
SweepSpec load_sweep_file(const std::filesystem::path& path);

// Runs every cell, writing out_dir/cells/<name>/{trace.csv, metrics.csv,
// config_echo.json} plus a .done marker; cells already marked done are
// skipped, which makes interrupted sweeps resumable. Runs share nothing, so
// jobs > 1 executes them concurrently; the merged out_dir/sweep_results.csv
// (long format: cell, grid fields, seed, round, scalar metrics) is written
// from sorted cell names and is identical for any job count. Returns the
// number of cells executed (not skipped).
int run_sweep(const SweepSpec& spec, const std::filesystem::path& out_dir,
              int jobs);

}  // namespace vas::sim
