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
#include "qagents/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <regex>
#include <stdexcept>

#include <fmt/format.h>

namespace qagents {

namespace {

constexpr int kCanvas = 512;
constexpr std::string_view kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                         "#9467bd", "#ff7f0e", "#8c564b",
                                         "#e377c2", "#17becf"};

GateType parse_gate_type(const nlohmann::json &j) {
    const std::string s = j.is_string() ? j.get<std::string>() : j.dump();
    if (s == "0") {
        return GateType::Zero;
    }
    if (s == "pi" || s == "π") {
        return GateType::Pi;
    }
    throw std::invalid_argument("theta must be \"0\" or \"pi\", got " + s);
}

double angle_value(const nlohmann::json &j) {
    if (j.is_number()) {
        return j.get<double>();
    }
    if (j.is_string()) {
        return parse_angle(j.get<std::string>());
    }
    throw std::invalid_argument("angle must be a number or string");
}

std::vector<Sign> parse_signs(const std::string &text) {
    return SignPattern::parse(text).signs();
}

InitialState parse_initial(const nlohmann::json &j, double default_phi0) {
    if (j.is_string()) {
        if (j.get<std::string>() == "ground") {
            return initial::Ground{};
        }
        throw std::invalid_argument("unknown initial state '" + j.get<std::string>() + "'");
    }
    if (j.is_array()) {
        initial::Amplitudes a;
        for (const auto &v : j) {
            a.values.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
        }
        return a;
    }
    if (!j.is_object()) {
        throw std::invalid_argument("initial must be a string, object or amplitude list");
    }
    if (j.contains("signs")) {
        initial::SignTape t;
        t.signs = parse_signs(j.at("signs").get<std::string>());
        t.phi0 = j.contains("phi0") ? angle_value(j.at("phi0")) : default_phi0;
        const std::string basis = j.value("basis", std::string("lambda1"));
        if (basis == "lambda1") {
            t.basis = TapeBasis::Lambda1;
        } else if (basis == "lambda2") {
            t.basis = TapeBasis::Lambda2;
        } else {
            throw std::invalid_argument("tape basis must be lambda1 or lambda2");
        }
        return t;
    }
    if (j.contains("bits")) {
        return initial::Basis{j.at("bits").get<std::vector<int>>()};
    }
    if (j.contains("amplitudes")) {
        return parse_initial(j.at("amplitudes"), default_phi0);
    }
    throw std::invalid_argument("initial object needs signs, bits or amplitudes");
}

int pixel(double v) {
    // [-1, 1] -> [0, kCanvas - 1]
    const double clamped = std::clamp(v, -1.0, 1.0);
    return static_cast<int>(std::lround((clamped + 1.0) / 2.0 * (kCanvas - 1)));
}

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '&':
            out += "&amp;";
            break;
        default:
            out.push_back(c);
        }
    }
    return out;
}

} // namespace

void ExperimentSpec::validate() const {
    if (name.empty() ||
        !std::regex_match(name, std::regex("[A-Za-z0-9_.-]+")) || name == "." ||
        name == "..") {
        throw std::invalid_argument("experiment name '" + name + "' is not filesystem-safe");
    }
    if (sample_every < 1) {
        throw std::invalid_argument("sample_every must be >= 1");
    }
    config.validate();
}

double parse_angle(std::string_view text) {
    static const std::regex expr(
        R"(^\s*(?:([0-9.eE+-]+)\s*\*\s*)?pi(?:\s*/\s*(?:sqrt\(\s*([0-9.eE+]+)\s*\)|([0-9.eE+]+)))?\s*$)");
    const std::string s(text);
    std::smatch match;
    if (std::regex_match(s, match, expr)) {
        double value = std::numbers::pi;
        if (match[1].matched) {
            value *= std::stod(match[1].str());
        }
        if (match[2].matched) {
            value /= std::sqrt(std::stod(match[2].str()));
        } else if (match[3].matched) {
            value /= std::stod(match[3].str());
        }
        return value;
    }
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(s, &used);
    } catch (const std::exception &) {
        throw std::invalid_argument("cannot parse angle '" + s + "'");
    }
    if (s.find_first_not_of(" \t", used) != std::string::npos) {
        throw std::invalid_argument("cannot parse angle '" + s + "'");
    }
    return value;
}

ExperimentSpec parse_experiment(const nlohmann::json &doc) {
    if (!doc.is_object()) {
        throw std::invalid_argument("experiment file must hold a JSON object");
    }
    ExperimentSpec spec;
    spec.name = doc.value("name", spec.name);
    auto &cfg = spec.config;

    std::vector<GateType> types;
    if (doc.contains("theta")) {
        const auto &t = doc.at("theta");
        if (t.is_array()) {
            for (const auto &x : t) {
                types.push_back(parse_gate_type(x));
            }
        } else {
            types.push_back(parse_gate_type(t));
        }
    }
    cfg.num_agents = doc.value("K", types.empty() ? std::size_t{1} : types.size());
    if (types.empty()) {
        types.assign(cfg.num_agents, GateType::Zero);
    } else if (types.size() == 1 && cfg.num_agents > 1) {
        types.assign(cfg.num_agents, types.front());
    }
    cfg.agent_types = std::move(types);
    cfg.ring_size = doc.value("M", std::size_t{1});

    if (doc.contains("alpha")) {
        const auto &a = doc.at("alpha");
        if (a.is_array()) {
            cfg.alphas.clear();
            for (const auto &x : a) {
                cfg.alphas.push_back(angle_value(x));
            }
        } else {
            cfg.alphas.assign(cfg.ring_size, angle_value(a));
        }
    } else {
        cfg.alphas.assign(cfg.ring_size, std::numbers::pi / std::numbers::sqrt3);
    }
    if (doc.contains("offsets")) {
        cfg.agent_offsets = doc.at("offsets").get<std::vector<std::size_t>>();
    } else {
        cfg.agent_offsets.assign(cfg.num_agents, 1);
    }
    const std::string schedule = doc.value("schedule", std::string("interleaved"));
    if (schedule == "interleaved") {
        cfg.schedule = Schedule::Interleaved;
    } else if (schedule == "grouped") {
        cfg.schedule = Schedule::Grouped;
    } else {
        throw std::invalid_argument("schedule must be grouped or interleaved");
    }
    spec.phi0 = doc.contains("phi0") ? angle_value(doc.at("phi0")) : 0.0;
    if (doc.contains("initial")) {
        cfg.initial = parse_initial(doc.at("initial"), spec.phi0);
    }
    spec.steps = doc.value("steps", std::size_t{0});
    spec.sample_every = doc.value("sample_every", std::size_t{1});
    spec.selection = doc.value("selection", spec.selection);
    spec.validate();
    return spec;
}

ExperimentSpec load_experiment(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file " + path.string());
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument("invalid config file " + path.string() + ": " + e.what());
    }
    return parse_experiment(doc);
}

std::string format_number(double x) { return fmt::format("{:.17g}", x); }

std::string pattern_token(const SignPattern &pattern) {
    std::string s;
    for (Sign x : pattern.signs()) {
        s.push_back(x == Sign::Plus ? 'p' : 'm');
    }
    return s;
}

void write_trajectory_rows(std::ostream &out, std::string_view label,
                           std::span<const std::size_t> steps,
                           std::span<const BlochVector> bloch) {
    if (steps.size() != bloch.size()) {
        throw std::invalid_argument("trajectory rows: step and sample counts differ");
    }
    for (std::size_t i = 0; i < steps.size(); ++i) {
        out << fmt::format("{},{},{},{},{}\n", steps[i], label,
                           format_number(bloch[i].l1), format_number(bloch[i].l2),
                           format_number(bloch[i].l3));
    }
}

void write_trajectory_csv(std::ostream &out, std::string_view label,
                          std::span<const std::size_t> steps,
                          std::span<const BlochVector> bloch) {
    out << kTrajectoryHeader << '\n';
    write_trajectory_rows(out, label, steps, bloch);
}

void write_recursion_csv(std::ostream &out,
                         std::span<const RecursionSample> samples,
                         std::span<const double> defects) {
    const bool with_defect = !defects.empty();
    if (with_defect && defects.size() != samples.size()) {
        throw std::invalid_argument("recursion csv: one defect per sample required");
    }
    out << kRecursionHeader << (with_defect ? ",defect\n" : "\n");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto &s = samples[i];
        out << fmt::format("{},{},{},{},{}", s.counter.m, s.counter.n, s.counter.p,
                           format_number(s.y), format_number(s.z));
        if (with_defect) {
            out << ',' << format_number(defects[i]);
        }
        out << '\n';
    }
}

std::string scatter_svg(std::span<const ScatterSeries> series,
                        std::string_view title) {
    const int c = kCanvas / 2;
    std::string svg = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" "
        "viewBox=\"0 0 {0} {0}\">\n",
        kCanvas);
    svg += fmt::format("<title>{}</title>\n", xml_escape(title));
    svg += fmt::format("<rect width=\"{0}\" height=\"{0}\" fill=\"white\"/>\n", kCanvas);
    svg += fmt::format("<circle cx=\"{0}\" cy=\"{0}\" r=\"{1}\" fill=\"none\" "
                       "stroke=\"#999\" stroke-width=\"1\"/>\n",
                       (kCanvas - 1) / 2.0, (kCanvas - 1) / 2.0);
    svg += fmt::format("<line x1=\"0\" y1=\"{0}\" x2=\"{1}\" y2=\"{0}\" stroke=\"#ccc\"/>\n", c,
                       kCanvas);
    svg += fmt::format("<line x1=\"{0}\" y1=\"0\" x2=\"{0}\" y2=\"{1}\" stroke=\"#ccc\"/>\n", c,
                       kCanvas);
    for (std::size_t s = 0; s < series.size(); ++s) {
        const auto colour = kPalette[s % std::size(kPalette)];
        svg += fmt::format("<g fill=\"{}\"><desc>{}</desc>\n", colour,
                           xml_escape(series[s].label));
        std::vector<bool> seen(static_cast<std::size_t>(kCanvas * kCanvas), false);
        for (const auto &p : series[s].points) {
            // lambda2 to the right, lambda3 up
            const int x = pixel(p.l2);
            const int y = kCanvas - 1 - pixel(p.l3);
            const auto key = static_cast<std::size_t>(y * kCanvas + x);
            if (seen[key]) {
                continue;
            }
            seen[key] = true;
            svg += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"1\" height=\"1\"/>\n", x, y);
        }
        svg += "</g>\n";
    }
    svg += "</svg>\n";
    return svg;
}

nlohmann::json to_json(const ClusterSum &c) {
    return {{"subset", c.subset}, {"c", c.c}, {"Y", c.y}, {"Z", c.z}};
}

nlohmann::json to_json(const SumRuleReport &r) {
    return {{"total", r.total}, {"defect", r.defect}};
}

nlohmann::json to_json(const PeriodicityReport &r) {
    nlohmann::json j{{"classification", r.periodic ? "periodic" : "aperiodic-within-horizon"},
                     {"horizon", r.horizon}};
    if (r.periodic) {
        j["period"] = r.period;
    }
    j["fidelity_defect"] =
        std::isfinite(r.fidelity_defect) ? nlohmann::json(r.fidelity_defect) : nlohmann::json();
    return j;
}

void write_file(const std::filesystem::path &path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << content;
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

} // namespace qagents
