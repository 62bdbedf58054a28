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
 * Single-agent dynamics reduced to the 2-dimensional head.
 *
 * When every tape site starts in an eigenstate of the operator the agent's
 * QCNOT applies to it (lambda1 for theta = 0, i*lambda2 for theta = pi), the
 * tape never changes and the QCNOT acts on the head as
 *
 *     P00 * e + P11,
 *
 * where e is the eigenvalue of the site: e = s for theta = 0 (so a minus site
 * applies lambda3), e = i*s for theta = pi with s the lambda2 sign. The network
 * then stays a product state and only the head needs evolving. An arbitrary
 * superposition over sign patterns is recovered by weighting each primitive
 * by |a_j|^2, because the tape factors are orthogonal.
 */
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qagents/analysis.hpp"
#include "qagents/statevec.hpp"

namespace qagents {

class SignPattern {
  public:
    SignPattern() = default;
    explicit SignPattern(std::vector<Sign> signs) : signs_(std::move(signs)) {}

    /// Parses "+-+"; also accepts the unicode minus sign.
    static SignPattern parse(std::string_view text);

    [[nodiscard]] std::size_t size() const noexcept { return signs_.size(); }
    [[nodiscard]] Sign operator[](std::size_t i) const { return signs_[i]; }
    [[nodiscard]] const std::vector<Sign> &signs() const noexcept {
        return signs_;
    }
    [[nodiscard]] std::string str() const;

    friend bool operator==(const SignPattern &, const SignPattern &) = default;
    friend auto operator<=>(const SignPattern &a, const SignPattern &b) {
        // + sorts before -
        return std::lexicographical_compare_three_way(
            a.signs_.begin(), a.signs_.end(), b.signs_.begin(), b.signs_.end(),
            [](Sign x, Sign y) { return static_cast<int>(y) <=> static_cast<int>(x); });
    }

  private:
    std::vector<Sign> signs_;
};

inline constexpr std::size_t kPatternSiteLimit = 20;

/// All 2^M patterns in lexicographic order with + before -.
[[nodiscard]] std::vector<SignPattern> enumerate_patterns(std::size_t ring_size);

/// cos(phi0/2)|0> - i sin(phi0/2)|1>.
[[nodiscard]] HeadState head_state(double phi0);

/// Tape basis in which patterns of a given agent type are primitives.
[[nodiscard]] TapeBasis primitive_basis(GateType type);

/// Head factor of the QCNOT on a site fixed in its sign eigenstate.
[[nodiscard]] Matrix2 conditional_head_operator(GateType type, Sign sign);

struct PrimitiveTrajectory {
    SignPattern pattern;
    /// head_states[m] for m = 0..steps.
    std::vector<HeadState> head_states;
    std::vector<BlochVector> bloch;
};

/// Evolves the head for `steps` steps. `alphas` holds one angle per site.
[[nodiscard]] PrimitiveTrajectory
evolve_primitive(const SignPattern &pattern, const HeadState &head0,
                 std::span<const double> alphas, GateType type,
                 std::size_t steps);
[[nodiscard]] PrimitiveTrajectory evolve_primitive(const SignPattern &pattern,
                                                   double phi0, double alpha,
                                                   GateType type,
                                                   std::size_t steps);

/// Periodicity of a primitive orbit sampled at cycle boundaries.
[[nodiscard]] PeriodicityReport
primitive_periodicity(const PrimitiveTrajectory &trajectory,
                      std::size_t horizon = kDefaultPeriodHorizon);

struct PrimitiveEnsemble {
    std::vector<double> weights;
    std::vector<PrimitiveTrajectory> trajectories;

    /// Checks sizes, non-negativity and unit sum (1e-12).
    void validate() const;
};

/// Weight-averaged head Bloch vector at step m.
[[nodiscard]] BlochVector reconstruct_reduced(const PrimitiveEnsemble &ensemble,
                                              std::size_t m);

/// Uniform 1/2^M over all patterns, the decomposition of the |0...0> tape.
[[nodiscard]] std::vector<double> ground_tape_weights(std::size_t ring_size);

/// Evolves the given patterns in parallel and pairs them with weights.
[[nodiscard]] PrimitiveEnsemble
build_ensemble(std::span<const SignPattern> patterns,
               std::span<const double> weights, const HeadState &head0,
               std::span<const double> alphas, GateType type,
               std::size_t steps);

/// sum_j a_j head0 (x) |P^j>: the full-network state whose reduced head
/// dynamics the ensemble with weights |a_j|^2 reproduces.
[[nodiscard]] StateVector superposed_initial_state(
    std::span<const SignPattern> patterns, std::span<const complex_t> coefficients,
    const HeadState &head0, TapeBasis basis);

} // namespace qagents
