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
 * Experiment files and output formats.
 *
 * Experiment file (JSON):
 *
 *     {
 *       "name": "fig4_m3",
 *       "K": 1, "M": 3,
 *       "theta": ["0"],                 // "0" or "pi" per agent
 *       "alpha": "pi/sqrt(3)",          // number, angle expression, or list
 *       "offsets": [1],
 *       "schedule": "interleaved",      // or "grouped"
 *       "initial": "ground",            // or {"signs": "+-", "phi0": 0.5}
 *                                       // or {"bits": [0,1,0,0]}
 *                                       // or {"amplitudes": [[re, im], ...]}
 *       "steps": 3000,
 *       "sample_every": 1,
 *       "phi0": 0.0, "selection": "all" // primitives only
 *     }
 *
 * Numbers are written with 17 significant digits so that every double
 * round-trips and outputs are byte-stable.
 */
#pragma once

#include <filesystem>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "qagents/analysis.hpp"
#include "qagents/network.hpp"
#include "qagents/primitives.hpp"
#include "qagents/recursion.hpp"

namespace qagents {

enum class OutputKind { TrajectoryCsv, PatternSvg, ClusterJson, RecursionCsv, VerifyReport };

struct ExperimentSpec {
    std::string name = "experiment";
    NetworkConfig config;
    std::size_t steps = 0;
    std::size_t sample_every = 1;
    std::set<OutputKind> outputs;
    /// Primitive runs: starting head angle and which patterns to evolve.
    double phi0 = 0.0;
    std::string selection = "all";

    void validate() const;
};

/// Parses "1.5", "pi", "pi/6", "2*pi/3", "pi/sqrt(3)".
[[nodiscard]] double parse_angle(std::string_view text);

[[nodiscard]] ExperimentSpec parse_experiment(const nlohmann::json &doc);
[[nodiscard]] ExperimentSpec load_experiment(const std::filesystem::path &path);

/// Shortest-round-trip-safe text form (17 significant digits).
[[nodiscard]] std::string format_number(double x);

/// Filesystem-safe token for a pattern: '+' -> 'p', '-' -> 'm'.
[[nodiscard]] std::string pattern_token(const SignPattern &pattern);

inline constexpr std::string_view kTrajectoryHeader = "m,pattern,lambda1,lambda2,lambda3";
inline constexpr std::string_view kRecursionHeader = "m,n,p,Y,Z";

void write_trajectory_csv(std::ostream &out, std::string_view label,
                          std::span<const std::size_t> steps,
                          std::span<const BlochVector> bloch);
void write_trajectory_rows(std::ostream &out, std::string_view label,
                           std::span<const std::size_t> steps,
                           std::span<const BlochVector> bloch);

/// Recursion rows, with a trailing `defect` column when `defects` is
/// non-empty.
void write_recursion_csv(std::ostream &out,
                         std::span<const RecursionSample> samples,
                         std::span<const double> defects = {});

struct ScatterSeries {
    std::string label;
    std::vector<BlochVector> points;
};

/// (lambda2, lambda3) scatter on a fixed [-1, 1]^2 viewport with the unit
/// circle and axis lines.
[[nodiscard]] std::string scatter_svg(std::span<const ScatterSeries> series,
                                      std::string_view title);

[[nodiscard]] nlohmann::json to_json(const ClusterSum &c);
[[nodiscard]] nlohmann::json to_json(const SumRuleReport &r);
[[nodiscard]] nlohmann::json to_json(const PeriodicityReport &r);

/// Writes `content` to `path`, throwing std::runtime_error when the file
/// cannot be opened.
void write_file(const std::filesystem::path &path, std::string_view content);

} // namespace qagents
