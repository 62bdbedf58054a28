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
 * Closed recursion for the head Bloch vector of a single theta = 0 agent
 * started in |0> (x) |0...0>.
 *
 * The head stays in the lambda2/lambda3 plane with lambda2 = Y_m and
 * lambda3 = Z_m. Writing m = n + 2M(p - 1), n in 1..2M, and
 * Y_1 = sin(alpha), Z_1 = -cos(alpha):
 *
 *     n odd:            Y_m = -Y_1 Z_{m-1} - Z_1 Y_{m-1}
 *                       Z_m = -Z_1 Z_{m-1} + Y_1 Y_{m-1}
 *     n even, != 2M:    Y_m = Y_{m-1} + Y_1 Z'_{m'}
 *     n = 2M, p odd:    Y_m = Y_{m-1} - Y_1 (-Z_1)^(M-1)
 *     n = 2M, p even:   Y_m = Y_{m-1}
 *     n even:           Z_m = -Z_1 Z_{m-2} + Y_1 Y_{m-2}
 *
 * Z'_{m'} is the Z series of the same recursion on a ring of M - 2 sites at
 * m' = m - 4p + 2, with Z_{m,0} = -1. Seeds: Y_0 = 0, Z_0 = -1.
 */
#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "qagents/network.hpp"

namespace qagents {

struct RecursionSample {
    StepCounter counter;
    double y = 0.0;
    double z = 0.0;
};

/// Evolving (Y, Z) pair with its full history. The M - 2 ring is held as a
/// nested recursion advanced on demand.
class RecursionState {
  public:
    RecursionState(std::size_t ring_size, double alpha);
    RecursionState(RecursionState &&) noexcept = default;
    RecursionState &operator=(RecursionState &&) noexcept = default;
    ~RecursionState();

    [[nodiscard]] std::size_t ring_size() const noexcept { return ring_size_; }
    /// Last computed step.
    [[nodiscard]] std::size_t step() const noexcept { return ys_.size() - 1; }
    [[nodiscard]] RecursionSample current() const;

    /// Applies exactly one rule and returns the new sample.
    RecursionSample advance();
    /// Advances until `m` is available.
    void advance_to(std::size_t m);

    /// History lookups; throw std::logic_error for steps not yet computed.
    [[nodiscard]] double y(std::size_t m) const;
    [[nodiscard]] double z(std::size_t m) const;

  private:
    std::size_t ring_size_;
    double y1_;
    double z1_;
    std::vector<double> ys_;
    std::vector<double> zs_;
    std::unique_ptr<RecursionState> inner_;
};

/// Free-function form of RecursionState::advance.
RecursionSample recursion_step(RecursionState &state);

/// Samples m = 1..steps.
[[nodiscard]] std::vector<RecursionSample>
recursion_series(std::size_t ring_size, double alpha, std::size_t steps);

} // namespace qagents
