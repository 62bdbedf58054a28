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
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "qagents/commands.hpp"

namespace {

struct Overrides {
    std::string config;
    std::optional<std::string> alpha;
    std::optional<std::size_t> steps;
    std::optional<std::size_t> ring_size;
    std::optional<std::string> theta;
    std::optional<std::string> phi0;
    std::optional<std::string> selection;
    std::optional<std::string> name;
    std::string out = ".";
    std::optional<std::string> format;
    std::string level = "quick";
};

void add_experiment_flags(CLI::App *cmd, Overrides &o) {
    cmd->add_option("--config", o.config, "Experiment JSON file");
    cmd->add_option("--alpha", o.alpha, "Rotation angle (number or expression such as pi/sqrt(3))");
    cmd->add_option("--steps", o.steps, "Number of whole steps m");
    cmd->add_option("--M", o.ring_size, "Ring size");
    cmd->add_option("--theta", o.theta, "Gate type of every agent: 0 or pi");
    cmd->add_option("--phi0", o.phi0, "Initial head angle (primitives)");
    cmd->add_option("--selection", o.selection,
                    "all | periodic | aperiodic | comma-separated sign patterns");
    cmd->add_option("--name", o.name, "Output file stem");
    cmd->add_option("--out", o.out, "Output directory");
    cmd->add_option("--format", o.format, "Emit only one output kind")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
}

qagents::ExperimentSpec build_spec(const Overrides &o, const std::string &command) {
    nlohmann::json doc = nlohmann::json::object();
    if (!o.config.empty()) {
        std::ifstream in(o.config);
        if (!in) {
            throw std::runtime_error("cannot open config file " + o.config);
        }
        doc = nlohmann::json::parse(in);
    }
    if (!doc.contains("name")) {
        doc["name"] = command;
    }
    if (o.alpha) {
        doc["alpha"] = *o.alpha;
    }
    if (o.steps) {
        doc["steps"] = *o.steps;
    }
    if (o.ring_size) {
        doc["M"] = *o.ring_size;
    }
    if (o.theta) {
        doc["theta"] = *o.theta;
    }
    if (o.phi0) {
        doc["phi0"] = *o.phi0;
    }
    if (o.selection) {
        doc["selection"] = *o.selection;
    }
    if (o.name) {
        doc["name"] = *o.name;
    }
    auto spec = qagents::parse_experiment(doc);
    if (o.format) {
        using qagents::OutputKind;
        if (*o.format == "svg") {
            spec.outputs = {OutputKind::PatternSvg};
        } else if (*o.format == "json") {
            spec.outputs = {OutputKind::ClusterJson};
        } else {
            spec.outputs = {OutputKind::TrajectoryCsv, OutputKind::RecursionCsv};
        }
    }
    return spec;
}

void report(const qagents::CommandResult &r) {
    for (const auto &f : r.files) {
        std::cout << f.string() << '\n';
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Simulator and analysis toolkit for agent qubits on a spin ring"};
    app.require_subcommand(1);

    Overrides o;
    auto *simulate = app.add_subcommand("simulate", "Full state-vector run; per-agent Bloch trajectories");
    auto *primitives = app.add_subcommand("primitives", "Evolve sign-pattern primitives and classify orbits");
    auto *recursion = app.add_subcommand("recursion", "Closed recursion for a single agent on the ground tape");
    auto *clusters = app.add_subcommand("clusters", "Cluster sums and sum-rule check of the final state");
    for (auto *cmd : {simulate, primitives, recursion, clusters}) {
        add_experiment_flags(cmd, o);
    }
    auto *verify = app.add_subcommand("verify", "Run the invariant checks of every module");
    verify->add_option("--level", o.level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    verify->add_option("--out", o.out, "Directory for verify_report.json");

    CLI11_PARSE(app, argc, argv);

    try {
        qagents::CommandResult result;
        if (*simulate) {
            result = qagents::cmd_simulate(build_spec(o, "simulate"), o.out);
        } else if (*primitives) {
            result = qagents::cmd_primitives(build_spec(o, "primitives"), o.out);
        } else if (*recursion) {
            result = qagents::cmd_recursion(build_spec(o, "recursion"), o.out);
        } else if (*clusters) {
            result = qagents::cmd_clusters(build_spec(o, "clusters"), o.out);
        } else {
            const auto level = o.level == "full" ? qagents::VerifyLevel::Full
                                                 : qagents::VerifyLevel::Quick;
            result = qagents::cmd_verify(level, o.out);
            for (const auto &c : result.summary["checks"]) {
                std::cout << (c["passed"].get<bool>() ? "ok    " : "FAIL  ")
                          << c["name"].get<std::string>() << "  defect="
                          << c["defect"].dump() << '\n';
            }
        }
        report(result);
        return result.exit_code;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
