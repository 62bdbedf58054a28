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
#include "qagents/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qagents {

namespace {

constexpr double kSurplusTolerance = 1e-10;

/// Sum of squared expectations over all strings with non-identity factors on
/// exactly the qubits in `subset`.
double squared_correlations(const StateVector &state,
                            std::span<const std::size_t> subset) {
    const std::size_t n = state.num_qubits();
    std::vector<Lambda> ops(n, Lambda::Identity);
    std::vector<int> digit(subset.size(), 1);
    for (std::size_t q : subset) {
        ops[q] = Lambda::L1;
    }
    double y = 0.0;
    while (true) {
        const double q = state.expectation(OperatorString(ops));
        y += q * q;
        // odometer over {1, 2, 3}^c
        std::size_t pos = 0;
        while (pos < subset.size() && digit[pos] == 3) {
            digit[pos] = 1;
            ops[subset[pos]] = Lambda::L1;
            ++pos;
        }
        if (pos == subset.size()) {
            break;
        }
        ++digit[pos];
        ops[subset[pos]] = static_cast<Lambda>(digit[pos]);
    }
    return y;
}

} // namespace

double distance(const BlochVector &a, const BlochVector &b) {
    return std::sqrt((a.l1 - b.l1) * (a.l1 - b.l1) + (a.l2 - b.l2) * (a.l2 - b.l2) +
                     (a.l3 - b.l3) * (a.l3 - b.l3));
}

BlochVector reduced_bloch(const StateVector &state, std::size_t qubit) {
    const std::size_t n = state.num_qubits();
    if (qubit >= n) {
        throw std::out_of_range("reduced_bloch: qubit index out of range");
    }
    return {state.expectation(OperatorString::local(n, qubit, Lambda::L1)),
            state.expectation(OperatorString::local(n, qubit, Lambda::L2)),
            state.expectation(OperatorString::local(n, qubit, Lambda::L3))};
}

BlochVector bloch_of(const HeadState &head) {
    const complex_t c = std::conj(head[0]) * head[1];
    return {2.0 * c.real(), -2.0 * c.imag(),
            std::norm(head[1]) - std::norm(head[0])};
}

double cluster_bound(std::size_t c) {
    if (c == 0) {
        throw std::invalid_argument("cluster_bound: empty cluster");
    }
    const double base = std::ldexp(1.0, static_cast<int>(c) - 1);
    return c % 2 == 0 ? base + 2.0 : base;
}

ClusterSum cluster_sum(const StateVector &state,
                       std::span<const std::size_t> subset) {
    if (subset.empty()) {
        throw std::invalid_argument("cluster_sum: empty subset");
    }
    std::vector<std::size_t> sorted(subset.begin(), subset.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("cluster_sum: repeated qubit in subset");
    }
    if (sorted.back() >= state.num_qubits()) {
        throw std::out_of_range("cluster_sum: qubit index out of range");
    }
    ClusterSum out;
    out.c = sorted.size();
    out.y = squared_correlations(state, sorted);
    out.z = cluster_bound(out.c);
    out.subset = std::move(sorted);
    return out;
}

SumRuleReport sum_rule_check(const StateVector &state) {
    const std::size_t n = state.num_qubits();
    if (n > kSumRuleQubitLimit) {
        throw std::invalid_argument("sum_rule_check: limited to 8 qubits");
    }
    SumRuleReport report;
    const std::size_t n_clusters = (std::size_t{1} << n) - 1;
    report.clusters.reserve(n_clusters);
    for (std::size_t mask = 1; mask <= n_clusters; ++mask) {
        std::vector<std::size_t> subset;
        for (std::size_t q = 0; q < n; ++q) {
            if (mask & (std::size_t{1} << q)) {
                subset.push_back(q);
            }
        }
        report.clusters.push_back(cluster_sum(state, subset));
        report.total += report.clusters.back().y;
    }
    report.defect = std::abs(report.total - static_cast<double>(n_clusters));
    return report;
}

SurplusCorrelation surplus_correlation(const StateVector &state,
                                       std::size_t q1, std::size_t q2) {
    if (q1 == q2) {
        throw std::invalid_argument("surplus_correlation: qubits must differ");
    }
    const std::size_t pair[] = {q1, q2};
    SurplusCorrelation out;
    out.y2 = cluster_sum(state, pair).y;
    out.product = reduced_bloch(state, q1).length_squared() *
                  reduced_bloch(state, q2).length_squared();
    out.entangled = out.y2 > out.product + kSurplusTolerance;
    return out;
}

PeriodicityReport
classify_periodicity(std::span<const std::vector<complex_t>> orbit,
                     std::size_t horizon) {
    if (orbit.empty()) {
        throw std::invalid_argument("classify_periodicity: empty orbit");
    }
    if (horizon < 1) {
        throw std::invalid_argument("classify_periodicity: horizon must be >= 1");
    }
    PeriodicityReport report;
    report.horizon = horizon;
    report.fidelity_defect = std::numeric_limits<double>::infinity();
    const std::size_t last = std::min(horizon, orbit.size() - 1);
    for (std::size_t p = 1; p <= last; ++p) {
        const double d = fidelity_defect(orbit[0], orbit[p]);
        if (d < kPeriodTolerance) {
            report.periodic = true;
            report.period = p;
            report.fidelity_defect = d;
            return report;
        }
        report.fidelity_defect = std::min(report.fidelity_defect, d);
    }
    return report;
}

PeriodicityReport
classify_periodicity(std::span<const std::vector<complex_t>> orbit,
                     std::size_t cycle_length, std::size_t horizon) {
    if (cycle_length < 1) {
        throw std::invalid_argument("classify_periodicity: cycle length must be >= 1");
    }
    std::vector<std::vector<complex_t>> sampled;
    for (std::size_t i = 0; i < orbit.size(); i += cycle_length) {
        sampled.push_back(orbit[i]);
    }
    return classify_periodicity(sampled, horizon);
}

std::vector<AgentTrajectory> bloch_trajectories(const NetworkConfig &config,
                                                std::size_t steps_per_agent,
                                                std::size_t sample_every) {
    if (sample_every < 1) {
        throw std::invalid_argument("bloch_trajectories: sample_every must be >= 1");
    }
    std::vector<AgentTrajectory> out(config.num_agents);
    const StateVector initial = prepare_initial(config);
    for (std::size_t k = 0; k < config.num_agents; ++k) {
        out[k].steps.push_back(0);
        out[k].bloch.push_back(reduced_bloch(initial, k));
    }
    (void)run(config, initial, steps_per_agent,
              [&](std::size_t agent, const StepCounter &c, const StateVector &s) {
                  if (c.m % sample_every == 0) {
                      out[agent].steps.push_back(c.m);
                      out[agent].bloch.push_back(reduced_bloch(s, agent));
                  }
              });
    return out;
}

} // namespace qagents
