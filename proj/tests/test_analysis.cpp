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
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"

#include "oracle.hpp"
#include "qagents/analysis.hpp"
#include "qagents/network.hpp"

using namespace qagents;
using oracle::cplx;

namespace {

const double kAlpha = std::numbers::pi / std::numbers::sqrt3;
const double kH = 1.0 / std::numbers::sqrt2;

std::vector<cplx> amps(const StateVector &s) {
    return {s.amplitudes().begin(), s.amplitudes().end()};
}

StateVector bell() { return StateVector::from_amplitudes({kH, 0.0, 0.0, kH}); }

/// Sum of squared correlations over all 3^c strings on `subset`, by brute force.
double brute_cluster(const std::vector<cplx> &psi, std::size_t n,
                     const std::vector<std::size_t> &subset) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        count *= 3;
    }
    double y = 0.0;
    for (std::size_t code = 0; code < count; ++code) {
        std::vector<int> ops(n, 0);
        std::size_t rest = code;
        for (std::size_t q : subset) {
            ops[q] = static_cast<int>(rest % 3) + 1;
            rest /= 3;
        }
        const double v = oracle::expectation(psi, ops).real();
        y += v * v;
    }
    return y;
}

/// Orbit of a single theta = 0 agent on a sign tape, sampled at cycle boundaries.
std::vector<std::vector<complex_t>> sign_tape_orbit(std::vector<Sign> signs, double phi0,
                                                    std::size_t cycles) {
    const std::size_t M = signs.size();
    auto cfg = NetworkConfig::uniform(M, kAlpha, {GateType::Zero});
    cfg.initial = initial::SignTape{std::move(signs), phi0, TapeBasis::Lambda1};
    std::vector<std::vector<complex_t>> orbit;
    const auto start = prepare_initial(cfg);
    orbit.emplace_back(start.amplitudes().begin(), start.amplitudes().end());
    (void)run(cfg, start, cycles * 2 * M, [&](std::size_t, const StepCounter &c, const StateVector &s) {
        if (c.n == 2 * M) {
            orbit.emplace_back(s.amplitudes().begin(), s.amplitudes().end());
        }
    });
    return orbit;
}

} // namespace

TEST_CASE("reduced Bloch vectors") {
    const auto g = reduced_bloch(StateVector(1), 0);
    CHECK(g.l1 == 0.0);
    CHECK(g.l2 == 0.0);
    CHECK(g.l3 == -1.0);

    const double phi = 0.8;
    const HeadState head{std::cos(phi / 2.0), cplx{0.0, -std::sin(phi / 2.0)}};
    const auto hb = bloch_of(head);
    CHECK(std::abs(hb.l1) < 1e-15);
    CHECK(hb.l2 == doctest::Approx(std::sin(phi)).epsilon(1e-14));
    CHECK(hb.l3 == doctest::Approx(-std::cos(phi)).epsilon(1e-14));

    for (std::size_t q = 0; q < 2; ++q) {
        const auto b = reduced_bloch(bell(), q);
        CHECK(std::abs(b.l1) + std::abs(b.l2) + std::abs(b.l3) < 1e-15);
    }
    CHECK_THROWS_AS((void)reduced_bloch(bell(), 2), std::out_of_range);

    std::mt19937_64 rng(2);
    for (int t = 0; t < 50; ++t) {
        const auto psi = random_state(4, rng);
        const auto b = reduced_bloch(psi, 2);
        const auto ref = oracle::bloch(amps(psi), 4, 2);
        CHECK(std::abs(b.l1 - ref.l1) < 1e-13);
        CHECK(std::abs(b.l2 - ref.l2) < 1e-13);
        CHECK(std::abs(b.l3 - ref.l3) < 1e-13);
        CHECK(b.length_squared() <= 1.0 + 1e-10);
    }
}

TEST_CASE("cluster bound") {
    CHECK(cluster_bound(1) == 1.0);
    CHECK(cluster_bound(2) == 4.0);
    CHECK(cluster_bound(3) == 4.0);
    CHECK(cluster_bound(4) == 10.0);
    CHECK(cluster_bound(5) == 16.0);
    CHECK_THROWS_AS((void)cluster_bound(0), std::invalid_argument);
}

TEST_CASE("cluster sums") {
    std::mt19937_64 rng(4);
    // Product of random single-qubit pure states: every cluster sum is 1.
    std::vector<HeadState> factors;
    std::vector<cplx> product{1.0};
    for (int q = 0; q < 3; ++q) {
        const auto h = random_state(1, rng);
        std::vector<cplx> next;
        for (const auto &a : product) {
            next.push_back(a * h[0]);
            next.push_back(a * h[1]);
        }
        product = next;
    }
    const auto p = StateVector::from_amplitudes(product);
    for (std::vector<std::size_t> subset : {std::vector<std::size_t>{0}, {1, 2}, {0, 1, 2}}) {
        CHECK(cluster_sum(p, subset).y == doctest::Approx(1.0).epsilon(1e-13));
    }

    const std::size_t both[] = {0, 1};
    const auto c2 = cluster_sum(bell(), both);
    CHECK(c2.c == 2);
    CHECK(c2.y == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(c2.z == 4.0);
    const std::size_t first[] = {0};
    CHECK(std::abs(cluster_sum(bell(), first).y) < 1e-15);

    for (int t = 0; t < 20; ++t) {
        const auto psi = random_state(4, rng);
        const std::vector<std::size_t> subset{1, 3};
        CHECK(std::abs(cluster_sum(psi, subset).y - brute_cluster(amps(psi), 4, subset)) < 1e-12);
        const std::vector<std::size_t> triple{0, 2, 3};
        CHECK(std::abs(cluster_sum(psi, triple).y - brute_cluster(amps(psi), 4, triple)) < 1e-12);
    }

    CHECK_THROWS_AS((void)cluster_sum(bell(), std::span<const std::size_t>{}),
                    std::invalid_argument);
    const std::size_t twice[] = {1, 1};
    CHECK_THROWS_AS((void)cluster_sum(bell(), twice), std::invalid_argument);
    const std::size_t outside[] = {4};
    CHECK_THROWS_AS((void)cluster_sum(bell(), outside), std::out_of_range);
}

TEST_CASE("sum rule") {
    std::mt19937_64 rng(6);
    const auto one = sum_rule_check(random_state(1, rng));
    CHECK(one.total == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(one.clusters.size() == 1);

    const auto b = sum_rule_check(bell());
    CHECK(b.total == doctest::Approx(3.0).epsilon(1e-14));
    REQUIRE(b.clusters.size() == 3);
    CHECK(std::abs(b.clusters[0].y) < 1e-15);
    CHECK(std::abs(b.clusters[1].y) < 1e-15);
    CHECK(b.clusters[2].y == doctest::Approx(3.0));

    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(t) % 6;
        const auto r = sum_rule_check(random_state(n, rng));
        CHECK(r.defect < 1e-9);
        CHECK(r.clusters.size() == (std::size_t{1} << n) - 1);
    }

    const auto evolved = run(NetworkConfig::uniform(5, kAlpha, {GateType::Zero}), 500);
    CHECK(sum_rule_check(evolved).defect < 1e-9);

    CHECK_THROWS_AS((void)sum_rule_check(StateVector(9)), std::invalid_argument);
}

TEST_CASE("cluster bounds hold on random pure states") {
    std::mt19937_64 rng(8);
    double excess = -1.0;
    double lowest = 1.0;
    for (int t = 0; t < 1000; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(t) % 6;
        for (const auto &c : sum_rule_check(random_state(n, rng)).clusters) {
            excess = std::max(excess, c.y - c.z);
            lowest = std::min(lowest, c.y);
        }
    }
    CHECK(excess <= 1e-9);
    CHECK(lowest >= -1e-12);
}

TEST_CASE("surplus correlation") {
    std::mt19937_64 rng(10);
    const auto h0 = random_state(1, rng);
    const auto h1 = random_state(1, rng);
    const auto prod = StateVector::from_amplitudes(
        {h0[0] * h1[0], h0[0] * h1[1], h0[1] * h1[0], h0[1] * h1[1]});
    const auto p = surplus_correlation(prod, 0, 1);
    CHECK(p.y2 == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(p.product == doctest::Approx(1.0).epsilon(1e-13));
    CHECK_FALSE(p.entangled);

    const auto b = surplus_correlation(bell(), 0, 1);
    CHECK(b.y2 == doctest::Approx(3.0));
    CHECK(std::abs(b.product) < 1e-15);
    CHECK(b.entangled);

    CHECK_FALSE(surplus_correlation(StateVector(3), 0, 2).entangled);
    CHECK_THROWS_AS((void)surplus_correlation(bell(), 1, 1), std::invalid_argument);
}

TEST_CASE("periodicity of single-site sign tapes") {
    // Tape |->: the cycle map lambda3 U_alpha squares to the identity.
    for (double phi : {0.0, 0.4, std::numbers::pi / 6.0}) {
        const auto minus = classify_periodicity(sign_tape_orbit({Sign::Minus}, phi, 70));
        CHECK(minus.periodic);
        CHECK(minus.period == 2);
        CHECK(minus.fidelity_defect < 1e-9);
    }
    const auto plus = classify_periodicity(sign_tape_orbit({Sign::Plus}, std::numbers::pi / 6.0, 70));
    CHECK_FALSE(plus.periodic);
    CHECK(plus.horizon == kDefaultPeriodHorizon);
    CHECK(plus.fidelity_defect > 1e-9);
}

TEST_CASE("periodicity of two-site sign tapes") {
    const double phi = std::numbers::pi / 6.0;
    const std::vector<std::pair<std::vector<Sign>, bool>> cases{
        {{Sign::Plus, Sign::Plus}, false},
        {{Sign::Plus, Sign::Minus}, true},
        {{Sign::Minus, Sign::Plus}, true},
        {{Sign::Minus, Sign::Minus}, true},
    };
    for (const auto &[signs, periodic] : cases) {
        CHECK(classify_periodicity(sign_tape_orbit(signs, phi, 70)).periodic == periodic);
    }
}

TEST_CASE("periodicity is invariant under a global phase") {
    auto orbit = sign_tape_orbit({Sign::Minus, Sign::Plus}, 0.3, 70);
    const auto before = classify_periodicity(orbit);
    for (auto &state : orbit) {
        for (auto &a : state) {
            a *= std::polar(1.0, 1.234);
        }
    }
    const auto after = classify_periodicity(orbit);
    CHECK(after.periodic == before.periodic);
    CHECK(after.period == before.period);

    auto aperiodic = sign_tape_orbit({Sign::Plus}, 0.3, 70);
    const auto a0 = classify_periodicity(aperiodic);
    for (std::size_t i = 0; i < aperiodic.size(); ++i) {
        for (auto &a : aperiodic[i]) {
            a *= std::polar(1.0, 0.1 * static_cast<double>(i));
        }
    }
    CHECK(classify_periodicity(aperiodic).periodic == a0.periodic);
}

TEST_CASE("periodicity with a sampled orbit and a short horizon") {
    // Orbit recorded every step; cycle_length picks the boundaries.
    const std::size_t M = 1;
    auto cfg = NetworkConfig::uniform(M, kAlpha, {GateType::Zero});
    cfg.initial = initial::SignTape{{Sign::Minus}, 0.0, TapeBasis::Lambda1};
    std::vector<std::vector<complex_t>> orbit;
    const auto start = prepare_initial(cfg);
    orbit.emplace_back(start.amplitudes().begin(), start.amplitudes().end());
    (void)run(cfg, start, 20, [&](std::size_t, const StepCounter &, const StateVector &s) {
        orbit.emplace_back(s.amplitudes().begin(), s.amplitudes().end());
    });
    const auto r = classify_periodicity(orbit, 2 * M, 8);
    CHECK(r.periodic);
    CHECK(r.period == 2);

    const auto short_horizon = classify_periodicity(orbit, 2 * M, 1);
    CHECK_FALSE(short_horizon.periodic);

    CHECK_THROWS_AS((void)classify_periodicity(std::span<const std::vector<complex_t>>{}),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)classify_periodicity(orbit, 0), std::invalid_argument);
}

TEST_CASE("Bloch trajectories sample whole steps") {
    const auto cfg = NetworkConfig::uniform(2, kAlpha, {GateType::Zero});
    const auto t = bloch_trajectories(cfg, 10, 3);
    REQUIRE(t.size() == 1);
    CHECK(t[0].steps == std::vector<std::size_t>{0, 3, 6, 9});
    CHECK(t[0].bloch[0].l3 == -1.0);

    const auto none = bloch_trajectories(cfg, 0);
    CHECK(none[0].steps.size() == 1);
    CHECK_THROWS_AS((void)bloch_trajectories(cfg, 5, 0), std::invalid_argument);
}
