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
#include "qagents/primitives.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace qagents {

namespace {

constexpr double kWeightTolerance = 1e-12;

HeadState multiply(const Matrix2 &m, const HeadState &h) {
    return {m[0] * h[0] + m[1] * h[1], m[2] * h[0] + m[3] * h[1]};
}

Matrix2 rotation(double alpha) {
    const double c = std::cos(alpha / 2.0);
    const double s = std::sin(alpha / 2.0);
    return {complex_t{c, 0.0}, complex_t{0.0, -s}, complex_t{0.0, -s},
            complex_t{c, 0.0}};
}

} // namespace

SignPattern SignPattern::parse(std::string_view text) {
    std::vector<Sign> signs;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '+') {
            signs.push_back(Sign::Plus);
        } else if (c == '-') {
            signs.push_back(Sign::Minus);
        } else if (text.substr(i, 3) == "\xE2\x88\x92") {
            signs.push_back(Sign::Minus);
            i += 2;
        } else {
            throw std::invalid_argument("unknown sign pattern '" + std::string(text) + "'");
        }
    }
    if (signs.empty()) {
        throw std::invalid_argument("empty sign pattern");
    }
    return SignPattern(std::move(signs));
}

std::string SignPattern::str() const {
    std::string s;
    for (Sign x : signs_) {
        s.push_back(x == Sign::Plus ? '+' : '-');
    }
    return s;
}

std::vector<SignPattern> enumerate_patterns(std::size_t ring_size) {
    if (ring_size < 1 || ring_size > kPatternSiteLimit) {
        throw std::invalid_argument("enumerate_patterns: M must lie in [1, 20]");
    }
    const std::size_t count = std::size_t{1} << ring_size;
    std::vector<SignPattern> out;
    out.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
        std::vector<Sign> signs(ring_size);
        for (std::size_t mu = 0; mu < ring_size; ++mu) {
            const bool minus = (j >> (ring_size - 1 - mu)) & 1U;
            signs[mu] = minus ? Sign::Minus : Sign::Plus;
        }
        out.emplace_back(std::move(signs));
    }
    return out;
}

HeadState head_state(double phi0) {
    return {complex_t{std::cos(phi0 / 2.0), 0.0},
            complex_t{0.0, -std::sin(phi0 / 2.0)}};
}

TapeBasis primitive_basis(GateType type) {
    return type == GateType::Zero ? TapeBasis::Lambda1 : TapeBasis::Lambda2;
}

Matrix2 conditional_head_operator(GateType type, Sign sign) {
    const double s = static_cast<double>(static_cast<int>(sign));
    // theta = 0: lambda1 eigenvalue s; theta = pi: i*lambda2 eigenvalue i*s.
    const complex_t e = type == GateType::Zero ? complex_t{s, 0.0} : complex_t{0.0, s};
    return {e, 0.0, 0.0, 1.0};
}

PrimitiveTrajectory evolve_primitive(const SignPattern &pattern,
                                     const HeadState &head0,
                                     std::span<const double> alphas,
                                     GateType type, std::size_t steps) {
    const std::size_t M = pattern.size();
    if (M == 0) {
        throw std::invalid_argument("evolve_primitive: empty pattern");
    }
    if (alphas.size() != M) {
        throw std::invalid_argument("evolve_primitive: need one angle per site");
    }
    std::vector<Matrix2> cycle;
    cycle.reserve(2 * M);
    for (std::size_t mu = 0; mu < M; ++mu) {
        cycle.push_back(rotation(alphas[mu]));
        cycle.push_back(conditional_head_operator(type, pattern[mu]));
    }

    PrimitiveTrajectory out;
    out.pattern = pattern;
    out.head_states.reserve(steps + 1);
    out.bloch.reserve(steps + 1);
    HeadState h = head0;
    out.head_states.push_back(h);
    out.bloch.push_back(bloch_of(h));
    for (std::size_t m = 1; m <= steps; ++m) {
        h = multiply(cycle[(m - 1) % (2 * M)], h);
        out.head_states.push_back(h);
        out.bloch.push_back(bloch_of(h));
    }
    return out;
}

PrimitiveTrajectory evolve_primitive(const SignPattern &pattern, double phi0,
                                     double alpha, GateType type,
                                     std::size_t steps) {
    const std::vector<double> alphas(pattern.size(), alpha);
    return evolve_primitive(pattern, head_state(phi0), alphas, type, steps);
}

PeriodicityReport primitive_periodicity(const PrimitiveTrajectory &trajectory,
                                        std::size_t horizon) {
    const std::size_t cycle = 2 * trajectory.pattern.size();
    std::vector<std::vector<complex_t>> orbit;
    for (std::size_t m = 0; m < trajectory.head_states.size(); m += cycle) {
        const auto &h = trajectory.head_states[m];
        orbit.push_back({h[0], h[1]});
    }
    return classify_periodicity(orbit, horizon);
}

void PrimitiveEnsemble::validate() const {
    if (weights.size() != trajectories.size()) {
        throw std::invalid_argument("ensemble: missing trajectory for a weighted pattern");
    }
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) {
            throw std::invalid_argument("ensemble: negative weight");
        }
        sum += w;
    }
    if (std::abs(sum - 1.0) > kWeightTolerance) {
        throw std::invalid_argument("ensemble: weights do not sum to 1");
    }
}

BlochVector reconstruct_reduced(const PrimitiveEnsemble &ensemble,
                                std::size_t m) {
    ensemble.validate();
    BlochVector out;
    for (std::size_t j = 0; j < ensemble.weights.size(); ++j) {
        const auto &traj = ensemble.trajectories[j];
        if (m >= traj.bloch.size()) {
            throw std::out_of_range("reconstruct_reduced: trajectory for " +
                                    traj.pattern.str() + " not evolved to step " +
                                    std::to_string(m));
        }
        const double w = ensemble.weights[j];
        out.l1 += w * traj.bloch[m].l1;
        out.l2 += w * traj.bloch[m].l2;
        out.l3 += w * traj.bloch[m].l3;
    }
    return out;
}

std::vector<double> ground_tape_weights(std::size_t ring_size) {
    if (ring_size < 1 || ring_size > kPatternSiteLimit) {
        throw std::invalid_argument("ground_tape_weights: M must lie in [1, 20]");
    }
    const std::size_t count = std::size_t{1} << ring_size;
    return std::vector<double>(count, 1.0 / static_cast<double>(count));
}

PrimitiveEnsemble build_ensemble(std::span<const SignPattern> patterns,
                                 std::span<const double> weights,
                                 const HeadState &head0,
                                 std::span<const double> alphas, GateType type,
                                 std::size_t steps) {
    if (patterns.size() != weights.size()) {
        throw std::invalid_argument("build_ensemble: one weight per pattern required");
    }
    PrimitiveEnsemble ensemble;
    ensemble.weights.assign(weights.begin(), weights.end());
    ensemble.trajectories.resize(patterns.size());
    const auto count = static_cast<std::int64_t>(patterns.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t j = 0; j < count; ++j) {
        const auto idx = static_cast<std::size_t>(j);
        ensemble.trajectories[idx] =
            evolve_primitive(patterns[idx], head0, alphas, type, steps);
    }
    ensemble.validate();
    return ensemble;
}

StateVector superposed_initial_state(std::span<const SignPattern> patterns,
                                     std::span<const complex_t> coefficients,
                                     const HeadState &head0, TapeBasis basis) {
    if (patterns.empty() || patterns.size() != coefficients.size()) {
        throw std::invalid_argument("superposed_initial_state: one coefficient per pattern required");
    }
    const std::size_t M = patterns.front().size();
    std::vector<complex_t> amps(std::size_t{2} << M, complex_t{0.0, 0.0});
    for (std::size_t j = 0; j < patterns.size(); ++j) {
        if (patterns[j].size() != M) {
            throw std::invalid_argument("superposed_initial_state: patterns differ in length");
        }
        const StateVector term =
            StateVector::sign_tape(head0, patterns[j].signs(), basis);
        for (std::size_t i = 0; i < amps.size(); ++i) {
            amps[i] += coefficients[j] * term[i];
        }
    }
    return StateVector::from_amplitudes(std::move(amps));
}

} // namespace qagents
