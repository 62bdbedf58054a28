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
#include "qagents/network.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qagents {

namespace {

constexpr std::size_t kCommutatorQubitLimit = 6;

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};

HeadState head_from_angle(double phi0) {
    return {complex_t{std::cos(phi0 / 2.0), 0.0},
            complex_t{0.0, -std::sin(phi0 / 2.0)}};
}

StateVector product_state(const std::vector<HeadState> &factors) {
    std::vector<complex_t> amps{1.0};
    for (const auto &f : factors) {
        std::vector<complex_t> next(amps.size() * 2);
        for (std::size_t i = 0; i < amps.size(); ++i) {
            next[2 * i] = amps[i] * f[0];
            next[2 * i + 1] = amps[i] * f[1];
        }
        amps = std::move(next);
    }
    return StateVector::from_amplitudes(std::move(amps));
}

} // namespace

std::string to_string(Schedule s) {
    return s == Schedule::Grouped ? "grouped" : "interleaved";
}

std::string to_string(GateType t) { return t == GateType::Zero ? "0" : "pi"; }

void NetworkConfig::validate() const {
    if (num_agents < 1 || ring_size < 1) {
        throw std::invalid_argument("network needs at least one agent and one site");
    }
    if (agent_types.size() != num_agents) {
        throw std::invalid_argument("agent_types must have one entry per agent");
    }
    if (agent_offsets.size() != num_agents) {
        throw std::invalid_argument("agent_offsets must have one entry per agent");
    }
    if (alphas.size() != ring_size) {
        throw std::invalid_argument("alphas must have one entry per ring site");
    }
    for (auto off : agent_offsets) {
        if (off < 1 || off > ring_size) {
            throw std::invalid_argument("agent offset must lie in [1, M]");
        }
    }
    for (double a : alphas) {
        if (!std::isfinite(a)) {
            throw std::invalid_argument("rotation angles must be finite");
        }
    }
    std::visit(overloaded{
                   [](const initial::Ground &) {},
                   [&](const initial::Basis &b) {
                       if (b.bits.size() != num_qubits()) {
                           throw std::invalid_argument("initial basis bits must cover all K + M qubits");
                       }
                   },
                   [&](const initial::SignTape &t) {
                       if (t.signs.size() != ring_size) {
                           throw std::invalid_argument("initial sign tape must have M entries");
                       }
                   },
                   [&](const initial::Amplitudes &a) {
                       if (a.values.size() != (std::size_t{1} << num_qubits())) {
                           throw std::invalid_argument("initial amplitudes must have 2^N entries");
                       }
                   },
               },
               initial);
}

NetworkConfig NetworkConfig::uniform(std::size_t ring_size, double alpha,
                                     std::vector<GateType> types) {
    NetworkConfig cfg;
    cfg.num_agents = types.size();
    cfg.ring_size = ring_size;
    cfg.agent_types = std::move(types);
    cfg.alphas.assign(ring_size, alpha);
    cfg.agent_offsets.assign(cfg.num_agents, 1);
    return cfg;
}

StepCounter StepCounter::from_step(std::size_t m, std::size_t ring_size) {
    if (m == 0) {
        return {0, 0, 1};
    }
    const std::size_t cycle = 2 * ring_size;
    return {m, (m - 1) % cycle + 1, (m - 1) / cycle + 1};
}

GateDescriptor step_unitary(const NetworkConfig &config, std::size_t agent,
                            std::size_t n) {
    if (agent >= config.num_agents) {
        throw std::out_of_range("step_unitary: agent index out of range");
    }
    if (n < 1 || n > 2 * config.ring_size) {
        throw std::out_of_range("step_unitary: step-in-cycle must lie in [1, 2M]");
    }
    const std::size_t mu = (n + 1) / 2;
    GateDescriptor gate;
    gate.agent = agent;
    gate.type = config.agent_types[agent];
    if (n % 2 == 1) {
        gate.kind = GateDescriptor::Kind::Rotation;
        gate.alpha = config.alphas[mu - 1];
    } else {
        const std::size_t M = config.ring_size;
        const std::size_t site = (mu - 1 + config.agent_offsets[agent] - 1) % M + 1;
        gate.kind = GateDescriptor::Kind::QCnot;
        gate.env = config.site_qubit(site);
    }
    return gate;
}

void apply_gate(StateVector &state, const GateDescriptor &gate) {
    if (gate.kind == GateDescriptor::Kind::Rotation) {
        state.apply_local_rotation(gate.agent, gate.alpha);
    } else {
        state.apply_qcnot(gate.agent, gate.env, gate.type);
    }
}

DenseMatrix dense_gate(const GateDescriptor &gate, std::size_t n_qubits) {
    if (gate.kind == GateDescriptor::Kind::Rotation) {
        return dense::local_rotation(n_qubits, gate.agent, gate.alpha);
    }
    return dense::qcnot(n_qubits, gate.agent, gate.env, gate.type);
}

DenseMatrix commutator_dense(const GateDescriptor &a, const GateDescriptor &b,
                             std::size_t n_qubits) {
    if (n_qubits > kCommutatorQubitLimit) {
        throw std::invalid_argument("commutator_dense: limited to 6 qubits");
    }
    const DenseMatrix A = dense_gate(a, n_qubits);
    const DenseMatrix B = dense_gate(b, n_qubits);
    return A * B - B * A;
}

StateVector prepare_initial(const NetworkConfig &config) {
    config.validate();
    const std::size_t n = config.num_qubits();
    return std::visit(
        overloaded{
            [&](const initial::Ground &) { return StateVector(n); },
            [&](const initial::Basis &b) { return StateVector::basis(n, b.bits); },
            [&](const initial::SignTape &t) {
                if (config.num_agents == 1) {
                    return StateVector::sign_tape(head_from_angle(t.phi0), t.signs, t.basis);
                }
                std::vector<HeadState> factors(config.num_agents, head_from_angle(t.phi0));
                for (Sign s : t.signs) {
                    factors.push_back(tape_eigenstate(s, t.basis));
                }
                return product_state(factors);
            },
            [&](const initial::Amplitudes &a) {
                return StateVector::from_amplitudes(a.values);
            },
        },
        config.initial);
}

StateVector run(const NetworkConfig &config, std::size_t steps_per_agent,
                const Observer &observer) {
    return run(config, prepare_initial(config), steps_per_agent, observer);
}

StateVector run(const NetworkConfig &config, StateVector state,
                std::size_t steps_per_agent, const Observer &observer) {
    config.validate();
    if (state.num_qubits() != config.num_qubits()) {
        throw std::invalid_argument("run: state dimension does not match config");
    }
    const std::size_t M = config.ring_size;
    std::vector<std::size_t> done(config.num_agents, 0);

    auto advance = [&](std::size_t agent) {
        const std::size_t m = ++done[agent];
        const StepCounter counter = StepCounter::from_step(m, M);
        apply_gate(state, step_unitary(config, agent, counter.n));
        if (observer) {
            observer(agent, counter, state);
        }
    };

    if (config.schedule == Schedule::Grouped) {
        for (std::size_t k = 0; k < config.num_agents; ++k) {
            for (std::size_t s = 0; s < steps_per_agent; ++s) {
                advance(k);
            }
        }
    } else {
        for (std::size_t base = 0; base < steps_per_agent; base += 2) {
            const std::size_t chunk = std::min<std::size_t>(2, steps_per_agent - base);
            for (std::size_t k = 0; k < config.num_agents; ++k) {
                for (std::size_t s = 0; s < chunk; ++s) {
                    advance(k);
                }
            }
        }
    }
    return state;
}

} // namespace qagents
