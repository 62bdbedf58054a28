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
#include "qagents/commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

namespace qagents {

namespace fs = std::filesystem;

namespace {

void prepare_dir(const fs::path &dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw std::runtime_error("cannot create output directory " + dir.string());
    }
}

std::set<OutputKind> outputs_or(const ExperimentSpec &spec,
                                std::set<OutputKind> fallback) {
    return spec.outputs.empty() ? fallback : spec.outputs;
}

std::vector<SignPattern> select_patterns(const std::string &selection,
                                         std::size_t ring_size,
                                         const std::vector<SignPattern> &all,
                                         const std::vector<PeriodicityReport> &reports) {
    std::vector<SignPattern> out;
    if (selection == "all") {
        return all;
    }
    if (selection == "periodic" || selection == "aperiodic") {
        const bool want = selection == "periodic";
        for (std::size_t j = 0; j < all.size(); ++j) {
            if (reports[j].periodic == want) {
                out.push_back(all[j]);
            }
        }
        return out;
    }
    std::stringstream ss(selection);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const SignPattern p = SignPattern::parse(item);
        if (p.size() != ring_size) {
            throw std::invalid_argument("pattern '" + item + "' does not have M = " +
                                        std::to_string(ring_size) + " signs");
        }
        out.push_back(p);
    }
    if (out.empty()) {
        throw std::invalid_argument("empty pattern selection");
    }
    return out;
}

std::vector<std::size_t> sample_steps(std::size_t steps, std::size_t every) {
    std::vector<std::size_t> out;
    for (std::size_t m = 0; m <= steps; m += every) {
        out.push_back(m);
    }
    return out;
}

} // namespace

CommandResult cmd_simulate(const ExperimentSpec &spec, const fs::path &out_dir) {
    spec.validate();
    prepare_dir(out_dir);
    const auto outputs = outputs_or(spec, {OutputKind::TrajectoryCsv, OutputKind::PatternSvg});
    const auto trajectories = bloch_trajectories(spec.config, spec.steps, spec.sample_every);

    CommandResult result;
    result.summary = {{"command", "simulate"}, {"name", spec.name}, {"steps", spec.steps}};
    for (std::size_t k = 0; k < trajectories.size(); ++k) {
        const auto &t = trajectories[k];
        const std::string stem = fmt::format("{}_S{}", spec.name, k + 1);
        if (outputs.contains(OutputKind::TrajectoryCsv)) {
            std::ostringstream csv;
            write_trajectory_csv(csv, "full", t.steps, t.bloch);
            result.files.push_back(out_dir / (stem + ".csv"));
            write_file(result.files.back(), csv.str());
        }
        if (outputs.contains(OutputKind::PatternSvg)) {
            const ScatterSeries series[] = {{fmt::format("S{}", k + 1), t.bloch}};
            result.files.push_back(out_dir / (stem + ".svg"));
            write_file(result.files.back(), scatter_svg(series, stem));
        }
    }
    return result;
}

CommandResult cmd_primitives(const ExperimentSpec &spec, const fs::path &out_dir) {
    spec.validate();
    prepare_dir(out_dir);
    const auto outputs = outputs_or(spec, {OutputKind::TrajectoryCsv, OutputKind::PatternSvg});
    const auto &cfg = spec.config;
    const std::size_t M = cfg.ring_size;
    const GateType type = cfg.agent_types.front();
    const HeadState head = head_state(spec.phi0);

    // Evolve long enough to classify every orbit over the default horizon.
    const std::size_t horizon_steps = 2 * M * kDefaultPeriodHorizon;
    const std::size_t evolve_steps = std::max(spec.steps, horizon_steps);

    const auto all = enumerate_patterns(M);
    std::vector<PeriodicityReport> all_reports;
    std::vector<PrimitiveTrajectory> all_traj;
    const bool classify_all = spec.selection == "periodic" || spec.selection == "aperiodic";
    if (classify_all) {
        for (const auto &p : all) {
            all_traj.push_back(evolve_primitive(p, head, cfg.alphas, type, evolve_steps));
            all_reports.push_back(primitive_periodicity(all_traj.back()));
        }
    }
    const auto selected = select_patterns(spec.selection, M, all, all_reports);

    const std::vector<double> weights(selected.size(), 1.0 / static_cast<double>(selected.size()));
    const PrimitiveEnsemble ensemble =
        build_ensemble(selected, weights, head, cfg.alphas, type, evolve_steps);

    CommandResult result;
    result.summary = {{"command", "primitives"}, {"name", spec.name}, {"M", M},
                      {"theta", to_string(type)}, {"phi0", spec.phi0}};
    nlohmann::json classification = nlohmann::json::object();
    const auto steps = sample_steps(spec.steps, spec.sample_every);
    std::vector<ScatterSeries> series;

    for (const auto &traj : ensemble.trajectories) {
        const auto report = primitive_periodicity(traj);
        classification[traj.pattern.str()] = to_json(report);
        std::vector<BlochVector> samples;
        for (std::size_t m : steps) {
            samples.push_back(traj.bloch[m]);
        }
        if (outputs.contains(OutputKind::TrajectoryCsv)) {
            std::ostringstream csv;
            write_trajectory_csv(csv, traj.pattern.str(), steps, samples);
            result.files.push_back(out_dir /
                                   (spec.name + "_" + pattern_token(traj.pattern) + ".csv"));
            write_file(result.files.back(), csv.str());
        }
        series.push_back({traj.pattern.str(), std::move(samples)});
    }

    std::vector<BlochVector> mixture;
    for (std::size_t m : steps) {
        mixture.push_back(reconstruct_reduced(ensemble, m));
    }
    if (outputs.contains(OutputKind::TrajectoryCsv)) {
        std::ostringstream csv;
        write_trajectory_csv(csv, "ensemble", steps, mixture);
        result.files.push_back(out_dir / (spec.name + "_ensemble.csv"));
        write_file(result.files.back(), csv.str());
    }
    if (outputs.contains(OutputKind::PatternSvg)) {
        result.files.push_back(out_dir / (spec.name + ".svg"));
        write_file(result.files.back(), scatter_svg(series, spec.name));
    }
    result.summary["classification"] = classification;
    result.files.push_back(out_dir / (spec.name + "_periodicity.json"));
    write_file(result.files.back(), classification.dump(2) + "\n");
    return result;
}

CommandResult cmd_recursion(const ExperimentSpec &spec, const fs::path &out_dir) {
    spec.validate();
    if (spec.steps < 1) {
        throw std::invalid_argument("recursion needs steps >= 1");
    }
    const auto &cfg = spec.config;
    const double alpha = cfg.alphas.front();
    if (std::any_of(cfg.alphas.begin(), cfg.alphas.end(), [&](double a) { return a != alpha; })) {
        throw std::invalid_argument("recursion requires a single uniform alpha");
    }
    prepare_dir(out_dir);
    const std::size_t M = cfg.ring_size;
    const auto samples = recursion_series(M, alpha, spec.steps);

    std::vector<double> defects;
    double max_defect = 0.0;
    const bool compare = M <= kRecursionCompareLimit;
    if (compare) {
        defects.resize(samples.size());
        const auto sim = NetworkConfig::uniform(M, alpha, {GateType::Zero});
        (void)run(sim, spec.steps, [&](std::size_t, const StepCounter &c, const StateVector &s) {
            const BlochVector b = reduced_bloch(s, 0);
            const auto &r = samples[c.m - 1];
            defects[c.m - 1] =
                std::max({std::abs(b.l1), std::abs(b.l2 - r.y), std::abs(b.l3 - r.z)});
        });
        max_defect = *std::max_element(defects.begin(), defects.end());
    }

    CommandResult result;
    std::ostringstream csv;
    write_recursion_csv(csv, samples, defects);
    result.files.push_back(out_dir / (spec.name + ".csv"));
    write_file(result.files.back(), csv.str());

    result.summary = {{"command", "recursion"}, {"name", spec.name}, {"M", M},
                      {"alpha", alpha},         {"steps", spec.steps}, {"compared", compare}};
    result.summary["max_defect"] = compare ? nlohmann::json(max_defect) : nlohmann::json();
    result.files.push_back(out_dir / (spec.name + "_summary.json"));
    write_file(result.files.back(), result.summary.dump(2) + "\n");
    return result;
}

CommandResult cmd_clusters(const ExperimentSpec &spec, const fs::path &out_dir) {
    spec.validate();
    prepare_dir(out_dir);
    const StateVector state = run(spec.config, spec.steps);
    const std::size_t n = state.num_qubits();

    nlohmann::json doc{{"name", spec.name}, {"N", n}, {"steps", spec.steps}};
    nlohmann::json clusters = nlohmann::json::array();
    if (n <= kSumRuleQubitLimit) {
        const auto report = sum_rule_check(state);
        for (const auto &c : report.clusters) {
            clusters.push_back(to_json(c));
        }
        doc["sum_rule"] = to_json(report);
    } else {
        for (std::size_t a = 0; a < n; ++a) {
            const std::size_t one[] = {a};
            clusters.push_back(to_json(cluster_sum(state, one)));
            for (std::size_t b = a + 1; b < n; ++b) {
                const std::size_t two[] = {a, b};
                clusters.push_back(to_json(cluster_sum(state, two)));
            }
        }
        doc["sum_rule"] = nullptr;
    }
    doc["clusters"] = clusters;

    nlohmann::json surplus = nlohmann::json::array();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            const auto s = surplus_correlation(state, a, b);
            surplus.push_back({{"pair", {a, b}}, {"Y2", s.y2}, {"product", s.product},
                               {"entangled", s.entangled}});
        }
    }
    doc["surplus"] = surplus;

    CommandResult result;
    result.summary = doc.contains("sum_rule") ? doc["sum_rule"] : nlohmann::json();
    result.files.push_back(out_dir / (spec.name + "_clusters.json"));
    write_file(result.files.back(), doc.dump(2) + "\n");
    return result;
}

CommandResult cmd_verify(VerifyLevel level, const fs::path &out_dir) {
    const auto checks = run_verification(level);
    CommandResult result;
    nlohmann::json list = nlohmann::json::array();
    bool all_passed = true;
    for (const auto &c : checks) {
        list.push_back(to_json(c));
        all_passed = all_passed && c.passed;
    }
    result.summary = {{"level", level == VerifyLevel::Full ? "full" : "quick"},
                      {"passed", all_passed},
                      {"checks", list}};
    result.exit_code = all_passed ? 0 : 1;
    if (!out_dir.empty()) {
        prepare_dir(out_dir);
        result.files.push_back(out_dir / "verify_report.json");
        write_file(result.files.back(), result.summary.dump(2) + "\n");
    }
    return result;
}

} // namespace qagents
