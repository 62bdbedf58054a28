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
 * K agent qubits moving around a ring of M environment qubits.
 *
 * Each agent runs a fixed cycle of 2M steps. Odd step n = 2mu - 1 rotates the
 * agent by alpha_mu; even step n = 2mu couples the agent to ring site mu
 * (shifted by the agent's starting offset) through the QCNOT of the agent's
 * type.
 */
#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "qagents/dense.hpp"
#include "qagents/statevec.hpp"

namespace qagents {

enum class Schedule {
    /// All steps of S1, then all steps of S2, ...
    Grouped,
    /// Per site: S1 (rotation, QCNOT), S2 (rotation, QCNOT), ..., then advance.
    Interleaved,
};

[[nodiscard]] std::string to_string(Schedule s);
[[nodiscard]] std::string to_string(GateType t);

namespace initial {
struct Ground {};
struct Basis {
    std::vector<int> bits;
};
/// Every agent in cos(phi0/2)|0> - i sin(phi0/2)|1>, tape in sign eigenstates.
struct SignTape {
    std::vector<Sign> signs;
    double phi0 = 0.0;
    TapeBasis basis = TapeBasis::Lambda1;
};
struct Amplitudes {
    std::vector<complex_t> values;
};
} // namespace initial

using InitialState = std::variant<initial::Ground, initial::Basis,
                                  initial::SignTape, initial::Amplitudes>;

struct NetworkConfig {
    std::size_t num_agents = 1;
    std::size_t ring_size = 1;
    std::vector<GateType> agent_types{GateType::Zero};
    /// One rotation angle per ring site.
    std::vector<double> alphas{0.0};
    /// 1-based starting site of each agent.
    std::vector<std::size_t> agent_offsets{1};
    Schedule schedule = Schedule::Interleaved;
    InitialState initial = initial::Ground{};

    [[nodiscard]] std::size_t num_qubits() const noexcept {
        return num_agents + ring_size;
    }
    /// Qubit index of 1-based ring site mu.
    [[nodiscard]] std::size_t site_qubit(std::size_t mu) const noexcept {
        return num_agents + mu - 1;
    }
    /// Throws std::invalid_argument on any broken invariant.
    void validate() const;

    /// K agents with default offsets, uniform alpha and ground initial state.
    static NetworkConfig uniform(std::size_t ring_size, double alpha,
                                 std::vector<GateType> types);
};

/// m = n + 2M(p - 1) with n in 1..2M; m = 0 is represented as n = 0, p = 1.
struct StepCounter {
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t p = 1;

    static StepCounter from_step(std::size_t m, std::size_t ring_size);
};

struct GateDescriptor {
    enum class Kind { Rotation, QCnot };
    Kind kind = Kind::Rotation;
    std::size_t agent = 0;
    /// Qubit index of the coupled site (QCnot only).
    std::size_t env = 0;
    double alpha = 0.0;
    GateType type = GateType::Zero;
};

/// Gate applied by `agent` at step-in-cycle n (1..2M).
[[nodiscard]] GateDescriptor step_unitary(const NetworkConfig &config,
                                          std::size_t agent, std::size_t n);

void apply_gate(StateVector &state, const GateDescriptor &gate);
[[nodiscard]] DenseMatrix dense_gate(const GateDescriptor &gate,
                                     std::size_t n_qubits);

/// AB - BA as a dense matrix (n_qubits <= 6).
[[nodiscard]] DenseMatrix commutator_dense(const GateDescriptor &a,
                                           const GateDescriptor &b,
                                           std::size_t n_qubits);

[[nodiscard]] StateVector prepare_initial(const NetworkConfig &config);

/// Called after every gate with the agent that owns it and that agent's
/// counter.
using Observer = std::function<void(std::size_t agent, const StepCounter &,
                                    const StateVector &)>;

/// Advances every agent by steps_per_agent steps in the configured schedule.
StateVector run(const NetworkConfig &config, std::size_t steps_per_agent,
                const Observer &observer = {});
StateVector run(const NetworkConfig &config, StateVector state,
                std::size_t steps_per_agent, const Observer &observer = {});

} // namespace qagents
