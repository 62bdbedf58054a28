// Copyright 2026 The qagents Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Subcommands of the `qagents` tool. Each takes a validated experiment and an
 * output directory and returns the files it wrote plus a JSON summary.
 *
 *   simulate    <name>_S<k>.csv, <name>_S<k>.svg
 *   primitives  <name>_<pattern>.csv, <name>_ensemble.csv, <name>.svg,
 *               <name>_periodicity.json
 *   recursion   <name>.csv, <name>_summary.json
 *   clusters    <name>_clusters.json
 *   verify      verify_report.json
 */
#pragma once

#include <filesystem>
#include <vector>

#include "json.hpp"

#include "qagents/io.hpp"
#include "qagents/verify.hpp"

namespace qagents {

struct CommandResult {
    int exit_code = 0;
    std::vector<std::filesystem::path> files;
    nlohmann::json summary;
};

CommandResult cmd_simulate(const ExperimentSpec &spec,
                           const std::filesystem::path &out_dir);
CommandResult cmd_primitives(const ExperimentSpec &spec,
                             const std::filesystem::path &out_dir);
CommandResult cmd_recursion(const ExperimentSpec &spec,
                            const std::filesystem::path &out_dir);
CommandResult cmd_clusters(const ExperimentSpec &spec,
                           const std::filesystem::path &out_dir);
CommandResult cmd_verify(VerifyLevel level, const std::filesystem::path &out_dir);

/// Full simulation is compared against the recursion up to this ring size.
inline constexpr std::size_t kRecursionCompareLimit = 10;

} // namespace qagents
