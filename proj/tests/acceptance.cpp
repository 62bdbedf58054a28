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

// Acceptance suite. One line per criterion:
//     PASS|FAIL <id> <name>: <measurements> [time]
// Exit status is the number of failed criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "oracle.hpp"
#include "qagents/analysis.hpp"
#include "qagents/commands.hpp"
#include "qagents/network.hpp"
#include "qagents/primitives.hpp"
#include "qagents/recursion.hpp"

using namespace qagents;
namespace fs = std::filesystem;
using oracle::cplx;

namespace {

const double kAlpha = std::numbers::pi / std::numbers::sqrt3;
const fs::path kSource = QAGENTS_SOURCE_DIR;

struct Outcome {
    bool ok = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

double max_dev(const BlochVector &a, const BlochVector &b) {
    return std::max({std::abs(a.l1 - b.l1), std::abs(a.l2 - b.l2), std::abs(a.l3 - b.l3)});
}

std::vector<cplx> to_vec(const StateVector &s) {
    return {s.amplitudes().begin(), s.amplitudes().end()};
}

std::vector<cplx> kron_vec(const std::vector<cplx> &x, const std::vector<cplx> &y) {
    std::vector<cplx> out;
    for (cplx a : x) {
        for (cplx b : y) {
            out.push_back(a * b);
        }
    }
    return out;
}

std::vector<cplx> random_qubit(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<cplx> v{{g(rng), g(rng)}, {g(rng), g(rng)}};
    const double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    v[0] /= n;
    v[1] /= n;
    return v;
}

/// Head Bloch vectors m = 0..steps for a single agent.
std::vector<BlochVector> head_orbit(const NetworkConfig &cfg, const StateVector &start,
                                    std::size_t steps) {
    std::vector<BlochVector> out{reduced_bloch(start, 0)};
    (void)run(cfg, start, steps, [&](std::size_t, const StepCounter &, const StateVector &s) {
        out.push_back(reduced_bloch(s, 0));
    });
    return out;
}

// ---------------------------------------------------------------------------

Outcome gate_algebra() {
    std::mt19937_64 rng(1001);
    double power = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        for (auto [agent, env] : {std::pair<std::size_t, std::size_t>{0, 1}, {1, 0}}) {
            const auto psi = random_state(2, rng);
            auto a = psi;
            a.apply_qcnot(agent, env, GateType::Zero);
            a.apply_qcnot(agent, env, GateType::Zero);
            power = std::max(power, distance(a, psi));
            auto b = psi;
            for (int k = 0; k < 4; ++k) {
                b.apply_qcnot(agent, env, GateType::Pi);
            }
            power = std::max(power, distance(b, psi));
        }
    }

    // Tape eigenstates built here, independently of the library.
    const double r = 1.0 / std::numbers::sqrt2;
    const cplx i{0.0, 1.0};
    const std::vector<cplx> l1_plus{r, r}, l1_minus{r, -r};
    const std::vector<cplx> l2_plus{r, -i * r}, l2_minus{r, i * r};
    double eigen = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto head = random_qubit(rng);
        struct Case {
            GateType type;
            const std::vector<cplx> *tape;
            cplx factor;
        };
        const Case cases[] = {{GateType::Zero, &l1_plus, 1.0},
                              {GateType::Zero, &l1_minus, -1.0},
                              {GateType::Pi, &l2_plus, i},
                              {GateType::Pi, &l2_minus, -i}};
        for (const auto &c : cases) {
            auto s = StateVector::from_amplitudes(kron_vec(head, *c.tape));
            s.apply_qcnot(0, 1, c.type);
            const auto expected = kron_vec({c.factor * head[0], head[1]}, *c.tape);
            eigen = std::max(eigen, oracle::vec_distance(to_vec(s), expected));
        }
    }
    return {power < 1e-12 && eigen < 1e-12,
            fmt::format("power defect={:.2e} eigen defect={:.2e}", power, eigen)};
}

Outcome commutators() {
    using Kind = GateDescriptor::Kind;
    auto entrywise = [](const DenseMatrix &got, const oracle::Mat &want) {
        double worst = 0.0;
        for (std::size_t r = 0; r < want.dim; ++r) {
            for (std::size_t c = 0; c < want.dim; ++c) {
                worst = std::max(worst, std::abs(got(r, c) - want(r, c)));
            }
        }
        return worst;
    };
    const oracle::Mat zero8(8);
    const GateDescriptor u0_a{Kind::QCnot, 0, 2, 0.0, GateType::Zero};
    const GateDescriptor u0_b{Kind::QCnot, 1, 2, 0.0, GateType::Zero};
    const GateDescriptor upi_a{Kind::QCnot, 0, 2, 0.0, GateType::Pi};
    const GateDescriptor upi_b{Kind::QCnot, 1, 2, 0.0, GateType::Pi};

    const double same0 = entrywise(commutator_dense(u0_a, u0_b, 3), zero8);
    const double samepi = entrywise(commutator_dense(upi_a, upi_b, 3), zero8);

    auto mixed_want = oracle::kron_all({oracle::p00(), oracle::p00(), oracle::lam(3)});
    for (auto &x : mixed_want.a) {
        x *= -2.0;
    }
    const double mixed = entrywise(commutator_dense(u0_a, upi_b, 3), mixed_want);

    // Distinct sites need a second ring site.
    const GateDescriptor upi_b_site2{Kind::QCnot, 1, 3, 0.0, GateType::Pi};
    const double sites = entrywise(commutator_dense(u0_a, upi_b_site2, 4), oracle::Mat(16));

    // The dense path itself against the oracle products.
    const auto a = oracle::qcnot(3, 0, 2, false);
    const auto b = oracle::qcnot(3, 1, 2, true);
    const double cross = entrywise(commutator_dense(u0_a, upi_b, 3),
                                   oracle::add(oracle::mul(a, b), oracle::mul(b, a), -1.0));

    const double worst = std::max({same0, samepi, mixed, sites, cross});
    return {worst < 1e-12,
            fmt::format("same-type={:.1e}/{:.1e} mixed={:.1e} sites={:.1e} oracle={:.1e}", same0,
                        samepi, mixed, sites, cross)};
}

Outcome triple_oracle() {
    const std::size_t steps = 1000;
    double sr = 0.0, sd = 0.0, rd = 0.0, dense = 0.0, far = 0.0;
    for (std::size_t M = 1; M <= 10; ++M) {
        const auto cfg = NetworkConfig::uniform(M, kAlpha, {GateType::Zero});
        const auto sim = head_orbit(cfg, StateVector(M + 1), steps);
        RecursionState rec(M, kAlpha);
        rec.advance_to(steps);
        double this_sr = 0.0;
        for (std::size_t m = 0; m <= steps; ++m) {
            this_sr = std::max({this_sr, std::abs(sim[m].l1), std::abs(sim[m].l2 - rec.y(m)),
                                std::abs(sim[m].l3 - rec.z(m))});
        }
        if (M >= 7) {
            far = std::max(far, this_sr);
            continue;
        }
        sr = std::max(sr, this_sr);

        const std::vector<double> alphas(M, kAlpha);
        const auto ensemble = build_ensemble(enumerate_patterns(M), ground_tape_weights(M),
                                             head_state(0.0), alphas, GateType::Zero, steps);
        for (std::size_t m = 0; m <= steps; ++m) {
            const auto d = reconstruct_reduced(ensemble, m);
            sd = std::max({sd, std::abs(sim[m].l2 - d.l2), std::abs(sim[m].l3 - d.l3)});
            rd = std::max({rd, std::abs(rec.y(m) - d.l2), std::abs(rec.z(m) - d.l3)});
        }

        // Brute-force dense replay as a fourth, kernel-free witness.
        const std::size_t n = M + 1;
        std::vector<oracle::Mat> cycle;
        for (std::size_t mu = 1; mu <= M; ++mu) {
            cycle.push_back(oracle::rotation(n, 0, kAlpha));
            cycle.push_back(oracle::qcnot(n, 0, mu, false));
        }
        std::vector<cplx> psi(std::size_t{1} << n);
        psi[0] = 1.0;
        for (std::size_t m = 1; m <= steps; ++m) {
            psi = oracle::matvec(cycle[(m - 1) % (2 * M)], psi);
            const auto b = oracle::bloch(psi, n, 0);
            dense = std::max({dense, std::abs(b.l2 - rec.y(m)), std::abs(b.l3 - rec.z(m))});
        }
    }
    const double worst = std::max({sr, sd, rd, dense, far});
    return {worst < 1e-10,
            fmt::format("M1-6 sim/rec={:.1e} sim/dec={:.1e} rec/dec={:.1e} dense/rec={:.1e}; "
                        "M7-10 sim/rec={:.1e}",
                        sr, sd, rd, dense, far)};
}

Outcome primitive_structure() {
    const double phi = std::numbers::pi / 6.0;
    const std::size_t steps = 2 * 2 * kDefaultPeriodHorizon;
    bool classes = true;
    double geometry = 0.0;
    std::string periods;
    for (const auto &p : enumerate_patterns(2)) {
        const auto t = evolve_primitive(p, phi, kAlpha, GateType::Zero, steps);
        const auto r = primitive_periodicity(t);
        classes = classes && (r.periodic == (p.str() != "++"));
        periods += fmt::format(" {}:{}", p.str(), r.periodic ? std::to_string(r.period) : "aper");
        for (const auto &b : t.bloch) {
            geometry = std::max({geometry, std::abs(b.l1), std::abs(b.length_squared() - 1.0)});
        }
    }
    return {classes && geometry < 1e-10,
            fmt::format("periods{} geometry defect={:.1e}", periods, geometry)};
}

Outcome sum_rule() {
    std::mt19937_64 rng(1005);
    double defect = 0.0;
    double bound_excess = -1.0;
    auto check = [&](const StateVector &s) {
        const auto rep = sum_rule_check(s);
        defect = std::max(defect, rep.defect);
        for (const auto &c : rep.clusters) {
            bound_excess = std::max(bound_excess, c.y - cluster_bound(c.c));
        }
    };
    for (int i = 0; i < 100; ++i) {
        check(random_state(1 + static_cast<std::size_t>(i % 6), rng));
    }
    for (std::size_t M = 3; M <= 7; ++M) {
        const auto cfg = NetworkConfig::uniform(M, kAlpha, {GateType::Zero});
        auto s = run(cfg, 100);
        check(s);
        s = run(cfg, std::move(s), 900);
        check(s);
    }
    return {defect < 1e-9 && bound_excess <= 1e-9,
            fmt::format("sum defect={:.1e} max(Y_c - bound)={:.3f}", defect, bound_excess)};
}

Outcome same_type() {
    double indep = 0.0;
    double sched = 0.0;
    const std::size_t steps = 2000;
    for (std::size_t M : {1U, 2U}) {
        auto duo = NetworkConfig::uniform(M, kAlpha, {GateType::Zero, GateType::Zero});
        duo.agent_offsets = {1, M};
        const auto both = bloch_trajectories(duo, steps);
        for (std::size_t k = 0; k < 2; ++k) {
            auto solo = NetworkConfig::uniform(M, kAlpha, {GateType::Zero});
            solo.agent_offsets = {duo.agent_offsets[k]};
            const auto alone = bloch_trajectories(solo, steps).front();
            for (std::size_t i = 0; i < alone.bloch.size(); ++i) {
                indep = std::max(indep, max_dev(alone.bloch[i], both[k].bloch[i]));
            }
        }
        const auto inter = run(duo, steps);
        duo.schedule = Schedule::Grouped;
        sched = std::max(sched, distance(inter, run(duo, steps)));
    }
    return {indep < 1e-10 && sched < 1e-10,
            fmt::format("solo defect={:.1e} schedule defect={:.1e}", indep, sched)};
}

Outcome mixed_type() {
    const std::size_t M = 2;
    const std::size_t steps = 4500;
    const auto mixed = NetworkConfig::uniform(M, kAlpha, {GateType::Zero, GateType::Pi});
    const auto s1 = bloch_trajectories(mixed, steps).front();
    const auto solo =
        bloch_trajectories(NetworkConfig::uniform(M, kAlpha, {GateType::Zero}), steps).front();
    double deviation = 0.0;
    for (std::size_t i = 0; i < s1.bloch.size(); ++i) {
        deviation = std::max(deviation, max_dev(s1.bloch[i], solo.bloch[i]));
    }
    // Closest approach to the starting point at cycle boundaries P <= 64.
    double closest = INFINITY;
    for (std::size_t P = 1; P <= kDefaultPeriodHorizon; ++P) {
        closest = std::min(closest, distance(s1.bloch[P * 2 * M], s1.bloch[0]));
    }
    return {deviation > 1e-6 && closest > 1e-6,
            fmt::format("max deviation from solo={:.3f} closest return={:.3e}", deviation,
                        closest)};
}

Outcome decomposition() {
    const std::size_t M = 4;
    const std::size_t checkpoints[] = {1, 10, 100, 1000};
    const auto patterns = enumerate_patterns(M);
    const std::vector<double> alphas(M, kAlpha);
    const auto cfg = NetworkConfig::uniform(M, kAlpha, {GateType::Zero});
    std::mt19937_64 rng(1008);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> w(patterns.size());
        double total = 0.0;
        for (auto &x : w) {
            x = uni(rng);
            total += x;
        }
        std::vector<complex_t> a(w.size());
        for (std::size_t j = 0; j < w.size(); ++j) {
            w[j] /= total;
            a[j] = std::polar(std::sqrt(w[j]), 2.0 * std::numbers::pi * uni(rng));
        }
        const auto h = random_qubit(rng);
        const HeadState head{h[0], h[1]};
        const auto ensemble = build_ensemble(patterns, w, head, alphas, GateType::Zero, 1000);
        const auto start = superposed_initial_state(patterns, a, head, TapeBasis::Lambda1);
        const auto sim = head_orbit(cfg, start, 1000);
        for (std::size_t m : checkpoints) {
            worst = std::max(worst, max_dev(sim[m], reconstruct_reduced(ensemble, m)));
        }
    }
    return {worst < 1e-10, fmt::format("max defect={:.1e}", worst)};
}

Outcome performance() {
    const std::size_t M = 20;
    const auto cfg = NetworkConfig::uniform(M, kAlpha, {GateType::Zero});
    StateVector s(M + 1);
    s = run(cfg, std::move(s), 2); // warm-up
    const std::size_t gates = 2 * 2 * M;
    const auto t0 = Clock::now();
    s = run(cfg, std::move(s), gates);
    const double rate = static_cast<double>(gates) / seconds_since(t0);
    double norm = 0.0;
    for (auto x : s.amplitudes()) {
        norm += std::norm(x);
    }
    const double norm_defect = std::abs(norm - 1.0);

    const auto t1 = Clock::now();
    RecursionState rec(M, kAlpha);
    rec.advance_to(1000000);
    const double rec_time = seconds_since(t1);
    const bool finite = std::isfinite(rec.current().y) && std::isfinite(rec.current().z);
    return {rate >= 100.0 && rec_time < 5.0 && finite && norm_defect < 1e-9,
            fmt::format("N=21 {:.0f} gates/s, recursion M=20 m=1e6 {:.2f}s", rate, rec_time)};
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<fs::path> regenerate(const fs::path &out) {
    std::vector<fs::path> files;
    auto keep_csv = [&](const CommandResult &r) {
        for (const auto &f : r.files) {
            if (f.extension() == ".csv") {
                files.push_back(f);
            }
        }
    };
    for (const char *name : {"fig2_m1", "fig2_m2", "fig3_periodic", "fig3_aperiodic"}) {
        auto spec = load_experiment(kSource / "configs" / (std::string(name) + ".json"));
        spec.outputs = {OutputKind::TrajectoryCsv};
        keep_csv(cmd_primitives(spec, out));
    }
    for (const char *name : {"fig4_m3", "fig4_m10"}) {
        auto spec = load_experiment(kSource / "configs" / (std::string(name) + ".json"));
        spec.outputs = {OutputKind::TrajectoryCsv};
        keep_csv(cmd_simulate(spec, out));
    }
    return files;
}

Outcome reproducibility() {
    std::random_device rd;
    const fs::path root = fs::temp_directory_path() / fmt::format("qagents_accept_{}", rd());
    const auto first = regenerate(root / "a");
    const auto second = regenerate(root / "b");
    std::size_t repeat_mismatch = 0;
    std::size_t golden_mismatch = 0;
    for (std::size_t i = 0; i < first.size(); ++i) {
        const auto a = slurp(first[i]);
        repeat_mismatch += a != slurp(second[i]);
        golden_mismatch += a != slurp(kSource / "tests" / "golden" / first[i].filename());
    }
    std::error_code ec;
    fs::remove_all(root, ec);
    return {!first.empty() && first.size() == second.size() && repeat_mismatch == 0 &&
                golden_mismatch == 0,
            fmt::format("{} files, {} differ between runs, {} differ from committed",
                        first.size(), repeat_mismatch, golden_mismatch)};
}

struct Criterion {
    int id;
    const char *name;
    double budget_s;
    std::function<Outcome()> body;
};

} // namespace

int main() {
    const Criterion criteria[] = {
        {1, "gate algebra", 1.0, gate_algebra},
        {2, "commutators", 1.0, commutators},
        {3, "triple-oracle agreement", 60.0, triple_oracle},
        {4, "primitive structure", 5.0, primitive_structure},
        {5, "sum rule", 120.0, sum_rule},
        {6, "same-type independence", 30.0, same_type},
        {7, "mixed-type interference", 30.0, mixed_type},
        {8, "decomposition universality", 60.0, decomposition},
        {9, "performance envelope", INFINITY, performance},
        {10, "reproducibility", INFINITY, reproducibility},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        const auto t0 = Clock::now();
        Outcome out;
        try {
            out = c.body();
        } catch (const std::exception &e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double t = seconds_since(t0);
        const bool in_time = t < c.budget_s;
        const bool ok = out.ok && in_time;
        failed += !ok;
        std::printf("%s %d %s: %s [%.2fs%s]\n", ok ? "PASS" : "FAIL", c.id, c.name,
                    out.detail.c_str(), t, in_time ? "" : " over budget");
        std::fflush(stdout);
    }
    return failed;
}
