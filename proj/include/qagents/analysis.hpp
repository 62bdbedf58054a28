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
 * Reduced-state observables computed from the full network state: Bloch
 * vectors, cluster sums of squared correlations and their bounds, the
 * pure-state sum rule, the pairwise surplus-correlation flag, and orbit
 * periodicity.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qagents/network.hpp"
#include "qagents/statevec.hpp"

namespace qagents {

struct BlochVector {
    double l1 = 0.0;
    double l2 = 0.0;
    double l3 = 0.0;

    /// Y1 = |lambda|^2.
    [[nodiscard]] double length_squared() const noexcept {
        return l1 * l1 + l2 * l2 + l3 * l3;
    }
};

[[nodiscard]] double distance(const BlochVector &a, const BlochVector &b);

[[nodiscard]] BlochVector reduced_bloch(const StateVector &state,
                                        std::size_t qubit);
/// Bloch vector of a bare single-qubit state.
[[nodiscard]] BlochVector bloch_of(const HeadState &head);

/// Largest Y_c allowed for a c-cluster: 2^(c-1), plus 2 when c is even.
[[nodiscard]] double cluster_bound(std::size_t c);

struct ClusterSum {
    std::vector<std::size_t> subset;
    std::size_t c = 0;
    double y = 0.0;
    double z = 0.0;
};

/// Sum of Q^2 over the 3^c strings that are non-identity on every qubit of
/// `subset` and identity elsewhere.
[[nodiscard]] ClusterSum cluster_sum(const StateVector &state,
                                     std::span<const std::size_t> subset);

inline constexpr std::size_t kSumRuleQubitLimit = 8;

struct SumRuleReport {
    double total = 0.0;
    double defect = 0.0;
    /// Every cluster, ordered by subset bitmask.
    std::vector<ClusterSum> clusters;
};

/// Sums all 2^N - 1 cluster sums; N <= 8.
[[nodiscard]] SumRuleReport sum_rule_check(const StateVector &state);

struct SurplusCorrelation {
    double y2 = 0.0;
    double product = 0.0;
    bool entangled = false;
};

[[nodiscard]] SurplusCorrelation surplus_correlation(const StateVector &state,
                                                     std::size_t q1,
                                                     std::size_t q2);

inline constexpr std::size_t kDefaultPeriodHorizon = 64;
inline constexpr double kPeriodTolerance = 1e-9;

struct PeriodicityReport {
    bool periodic = false;
    /// Period in cycles (periodic only).
    std::size_t period = 0;
    std::size_t horizon = 0;
    /// Defect at the reported period, or the smallest defect seen within the
    /// horizon when aperiodic.
    double fidelity_defect = 0.0;
};

/// `orbit[p]` is the state after p whole cycles; orbit[0] is the start.
/// Finds the smallest P <= horizon with 1 - |<orbit[0]|orbit[P]>| < 1e-9.
[[nodiscard]] PeriodicityReport
classify_periodicity(std::span<const std::vector<complex_t>> orbit,
                     std::size_t horizon = kDefaultPeriodHorizon);

/// Same, for an orbit sampled at every step; keeps every cycle_length-th
/// sample.
[[nodiscard]] PeriodicityReport
classify_periodicity(std::span<const std::vector<complex_t>> orbit,
                     std::size_t cycle_length, std::size_t horizon);

/// One agent's sampled reduced trajectory.
struct AgentTrajectory {
    std::vector<std::size_t> steps;
    std::vector<BlochVector> bloch;
};

/// Runs the network and records each agent's Bloch vector at m = 0 and at
/// every whole step m that is a multiple of sample_every.
[[nodiscard]] std::vector<AgentTrajectory>
bloch_trajectories(const NetworkConfig &config, std::size_t steps_per_agent,
                   std::size_t sample_every = 1);

} // namespace qagents
