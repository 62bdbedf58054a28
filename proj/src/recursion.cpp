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
#include "qagents/recursion.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qagents {

RecursionState::RecursionState(std::size_t ring_size, double alpha)
    : ring_size_(ring_size), y1_(std::sin(alpha)), z1_(-std::cos(alpha)) {
    if (ring_size < 1) {
        throw std::invalid_argument("RecursionState: M must be >= 1");
    }
    ys_ = {0.0, y1_};
    zs_ = {-1.0, z1_};
    if (ring_size >= 3) {
        inner_ = std::make_unique<RecursionState>(ring_size - 2, alpha);
    }
}

RecursionState::~RecursionState() = default;

RecursionSample RecursionState::current() const {
    const std::size_t m = step();
    return {StepCounter::from_step(m, ring_size_), ys_[m], zs_[m]};
}

double RecursionState::y(std::size_t m) const {
    if (m >= ys_.size()) {
        throw std::logic_error("recursion history: Y_" + std::to_string(m) +
                               " not retained");
    }
    return ys_[m];
}

double RecursionState::z(std::size_t m) const {
    if (m >= zs_.size()) {
        throw std::logic_error("recursion history: Z_" + std::to_string(m) +
                               " not retained");
    }
    return zs_[m];
}

RecursionSample RecursionState::advance() {
    const std::size_t m = step() + 1;
    const StepCounter c = StepCounter::from_step(m, ring_size_);
    const std::size_t M = ring_size_;
    double y = 0.0;
    double z = 0.0;
    if (c.n % 2 == 1) {
        y = -y1_ * zs_[m - 1] - z1_ * ys_[m - 1];
        z = -z1_ * zs_[m - 1] + y1_ * ys_[m - 1];
    } else {
        if (c.n != 2 * M) {
            const std::size_t m_prime = m + 2 - 4 * c.p;
            double z_inner = -1.0;
            if (inner_) {
                inner_->advance_to(m_prime);
                z_inner = inner_->z(m_prime);
            }
            y = ys_[m - 1] + y1_ * z_inner;
        } else if (c.p % 2 == 1) {
            y = ys_[m - 1] - y1_ * std::pow(-z1_, static_cast<double>(M - 1));
        } else {
            y = ys_[m - 1];
        }
        z = -z1_ * zs_[m - 2] + y1_ * ys_[m - 2];
    }
    ys_.push_back(y);
    zs_.push_back(z);
    return {c, y, z};
}

void RecursionState::advance_to(std::size_t m) {
    while (step() < m) {
        (void)advance();
    }
}

RecursionSample recursion_step(RecursionState &state) { return state.advance(); }

std::vector<RecursionSample> recursion_series(std::size_t ring_size,
                                              double alpha, std::size_t steps) {
    RecursionState state(ring_size, alpha);
    std::vector<RecursionSample> out;
    out.reserve(steps);
    if (steps >= 1) {
        out.push_back(state.current());
    }
    while (state.step() < steps) {
        out.push_back(state.advance());
    }
    return out;
}

} // namespace qagents
