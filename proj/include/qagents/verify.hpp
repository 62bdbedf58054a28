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
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "qagents/analysis.hpp"
#include "qagents/network.hpp"

namespace qagents {

enum class VerifyLevel { Quick, Full };

struct CheckResult {
    std::string name;
    double defect = 0.0;
    double tolerance = 0.0;
    /// Most checks require defect < tolerance; divergence checks require
    /// defect > tolerance.
    bool expect_above = false;
    bool passed = false;
};

[[nodiscard]] CheckResult make_check(std::string name, double defect,
                                     double tolerance, bool expect_above = false);

/// Pairwise maxima over m of |dlambda2|, |dlambda3| (and |lambda1| for the
/// simulation) between the three single-agent ground-tape routes.
struct TripleAgreement {
    double simulation_vs_recursion = 0.0;
    double simulation_vs_decomposition = 0.0;
    double recursion_vs_decomposition = 0.0;
};

/// The decomposition route is skipped (left at 0) when with_decomposition is
/// false.
[[nodiscard]] TripleAgreement triple_agreement(std::size_t ring_size,
                                               double alpha, std::size_t steps,
                                               bool with_decomposition);

/// S1 Bloch samples at m = 0..steps for a single agent on the ground tape.
[[nodiscard]] std::vector<BlochVector>
solo_trajectory(std::size_t ring_size, double alpha, GateType type,
                std::size_t steps);

[[nodiscard]] std::vector<CheckResult> run_verification(VerifyLevel level);

[[nodiscard]] nlohmann::json to_json(const CheckResult &c);

} // namespace qagents
