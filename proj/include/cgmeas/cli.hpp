// Copyright 2026 The cgmeasure Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CGMEAS_CLI_HPP
#define CGMEAS_CLI_HPP

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "cgmeas/analysis.hpp"
#include "cgmeas/errors.hpp"
#include "cgmeas/model.hpp"

namespace cgmeas::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Everything one invocation needs. Populated from the JSON config file
/// first, then from command-line flags, which take precedence.
struct RunConfig {
    std::string subcommand;
    double c0 = 1.0 / std::numbers::sqrt2;
    std::optional<double> c1;
    double c0_phase = 0.0;
    double c1_phase = 0.0;
    double p = 0.5;
    double phi = std::numbers::pi / 2.0;
    double omega = 1.0;
    std::vector<int> n_list;
    int theta_steps = 256;
    double theta_min = 0.0;
    std::optional<double> theta_max;
    std::optional<double> t_max;
    int p_steps = 101;
    double p_min = 0.0;
    double p_max = 1.0;
    int precision = 17;
    std::string out;
    std::string config;

    [[nodiscard]] double c1_magnitude() const { return c1.value_or(std::sqrt(std::max(0.0, 1.0 - c0 * c0))); }

    [[nodiscard]] ModelParams model() const {
        ModelParams m;
        m.c0 = std::polar(c0, c0_phase);
        m.c1 = std::polar(c1_magnitude(), c1_phase);
        m.p = p;
        m.phi = phi;
        m.omega = omega;
        return m;
    }
};

class UsageError : public Error {
   public:
    using Error::Error;
};

namespace detail {

inline std::vector<int> default_n_list(const std::string& sub) {
    if (sub == "prob-initial") return {9, 33, 99};
    if (sub == "prob-time") return {50};
    if (sub == "negativity") return {4, 6, 12, 24, 48};
    return {6, 12, 24, 48};
}

inline void check_config(const RunConfig& cfg) {
    if (!(cfg.c0 >= 0.0 && cfg.c0 <= 1.0)) throw UsageError(fmt::format("--c0 must lie in [0, 1], got {}", cfg.c0));
    if (cfg.c1 && !(*cfg.c1 >= 0.0 && *cfg.c1 <= 1.0)) {
        throw UsageError(fmt::format("--c1 must lie in [0, 1], got {}", *cfg.c1));
    }
    if (cfg.theta_max && cfg.t_max) throw UsageError("--theta-max and --t-max are mutually exclusive");
    if (cfg.theta_steps < 1 || cfg.p_steps < 1) throw UsageError("step counts must be positive");
    if (cfg.precision < 1 || cfg.precision > 17) throw UsageError("--precision must be in [1, 17]");
    try {
        ModelParams m = cfg.model();
        m.validate();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

/// Applies config-file values for every key whose flag was not given.
inline void merge_json(RunConfig& cfg, const nlohmann::json& j, const CLI::App& sub) {
    using Setter = std::function<void(const nlohmann::json&)>;
    const std::map<std::string, Setter> setters{
        {"n", [&](const auto& v) { cfg.n_list = v.template get<std::vector<int>>(); }},
        {"c0", [&](const auto& v) { cfg.c0 = v.template get<double>(); }},
        {"c1", [&](const auto& v) { cfg.c1 = v.template get<double>(); }},
        {"c0-phase", [&](const auto& v) { cfg.c0_phase = v.template get<double>(); }},
        {"c1-phase", [&](const auto& v) { cfg.c1_phase = v.template get<double>(); }},
        {"p", [&](const auto& v) { cfg.p = v.template get<double>(); }},
        {"phi", [&](const auto& v) { cfg.phi = v.template get<double>(); }},
        {"omega", [&](const auto& v) { cfg.omega = v.template get<double>(); }},
        {"theta-steps", [&](const auto& v) { cfg.theta_steps = v.template get<int>(); }},
        {"theta-min", [&](const auto& v) { cfg.theta_min = v.template get<double>(); }},
        {"theta-max", [&](const auto& v) { cfg.theta_max = v.template get<double>(); }},
        {"t-max", [&](const auto& v) { cfg.t_max = v.template get<double>(); }},
        {"p-steps", [&](const auto& v) { cfg.p_steps = v.template get<int>(); }},
        {"p-min", [&](const auto& v) { cfg.p_min = v.template get<double>(); }},
        {"p-max", [&](const auto& v) { cfg.p_max = v.template get<double>(); }},
        {"precision", [&](const auto& v) { cfg.precision = v.template get<int>(); }},
        {"out", [&](const auto& v) { cfg.out = v.template get<std::string>(); }},
    };
    if (!j.is_object()) throw UsageError("config file must contain a JSON object");
    for (const auto& [key, value] : j.items()) {
        const auto it = setters.find(key);
        if (it == setters.end()) throw UsageError(fmt::format("unknown config key '{}'", key));
        const CLI::Option* opt = sub.get_option_no_throw("--" + key);
        if (opt == nullptr) throw UsageError(fmt::format("config key '{}' does not apply to {}", key, sub.get_name()));
        if (opt->count() > 0) continue;
        try {
            it->second(value);
        } catch (const nlohmann::json::exception& e) {
            throw UsageError(fmt::format("config key '{}': {}", key, e.what()));
        }
    }
}

inline std::string full(double v) { return fmt::format("{:.17g}", v); }

inline std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

inline void write_header_comments(std::ostream& os, const RunConfig& cfg, const SweepSpec& spec) {
    os << "# cgmeas " << cfg.subcommand << '\n';
    os << "# c0=" << full(cfg.c0) << '\n';
    os << "# c0_phase=" << full(cfg.c0_phase) << '\n';
    os << "# c1=" << full(cfg.c1_magnitude()) << '\n';
    os << "# c1_phase=" << full(cfg.c1_phase) << '\n';
    os << "# p=" << full(cfg.p) << '\n';
    os << "# phi=" << full(cfg.phi) << '\n';
    os << "# omega=" << full(cfg.omega) << '\n';
    os << "# N=" << join_ints(spec.n_list) << '\n';
    os << "# sweep_variable=" << to_string(spec.variable) << '\n';
    os << "# grid_min=" << full(spec.grid.front()) << '\n';
    os << "# grid_max=" << full(spec.grid.back()) << '\n';
    os << "# grid_points=" << spec.grid.size() << '\n';
    os << "# precision=" << cfg.precision << '\n';
}

inline SweepSpec make_spec(const RunConfig& cfg) {
    SweepSpec spec;
    spec.base = cfg.model();
    spec.n_list = cfg.n_list;
    if (cfg.subcommand == "prob-initial") {
        spec.variable = SweepVariable::P;
        spec.grid = linspace(cfg.p_min, cfg.p_max, cfg.p_steps);
    } else if (cfg.t_max) {
        spec.variable = SweepVariable::Time;
        spec.grid = linspace(0.0, *cfg.t_max, cfg.theta_steps);
    } else {
        const double default_max = cfg.subcommand == "prob-time" ? 4.0 * std::numbers::pi : 2.0 * std::numbers::pi;
        spec.variable = SweepVariable::Theta;
        spec.grid = linspace(cfg.theta_min, cfg.theta_max.value_or(default_max), cfg.theta_steps);
    }
    try {
        spec.validate();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    return spec;
}

/// Emits one CSV line per (N, grid point), pivoting `width` consecutive
/// observable rows into columns.
inline void write_rows(std::ostream& os, const RunConfig& cfg, const SweepResult& result, std::size_t width,
                       bool angle_and_time) {
    const int prec = cfg.precision;
    for (std::size_t i = 0; i + width <= result.rows.size(); i += width) {
        const SweepRow& first = result.rows[i];
        if (angle_and_time) {
            const double theta =
                result.variable == SweepVariable::Time ? cfg.omega * first.sweep_value / first.N : first.sweep_value;
            const double t =
                result.variable == SweepVariable::Time ? first.sweep_value : first.sweep_value * first.N / cfg.omega;
            os << fmt::format("{:.{}g},{:.{}g},{}", theta, prec, t, prec, first.N);
        } else {
            os << fmt::format("{:.{}g},{}", first.sweep_value, prec, first.N);
        }
        for (std::size_t k = 0; k < width; ++k) os << fmt::format(",{:.{}g}", result.rows[i + k].value, prec);
        os << '\n';
    }
}

inline void run_sweep(const RunConfig& cfg, std::ostream& os) {
    const SweepSpec spec = make_spec(cfg);
    write_header_comments(os, cfg, spec);
    if (cfg.subcommand == "prob-initial" || cfg.subcommand == "prob-time") {
        const SweepResult r =
            cfg.subcommand == "prob-initial" ? sweep_initial_probabilities(spec) : sweep_time_probabilities(spec);
        os << "sweep_value,N,pr_plus1,pr_0,pr_minus1\n";
        write_rows(os, cfg, r, 3, false);
    } else if (cfg.subcommand == "negativity") {
        const SweepResult r = sweep_negativity(spec);
        os << "theta,t,N,negativity\n";
        write_rows(os, cfg, r, 1, true);
    } else {
        const SweepResult r = sweep_coherences(spec);
        os << "theta,t,N,abs_10,abs_1m1,abs_0m1\n";
        write_rows(os, cfg, r, 3, true);
    }
}

inline void add_sweep_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--n", cfg.n_list, "Comma-separated apparatus sizes N")->delimiter(',');
    sub->add_option("--c0", cfg.c0, "Magnitude of the |0> amplitude of the system qubit");
    sub->add_option("--c1", cfg.c1, "Magnitude of the |1> amplitude (default sqrt(1 - c0^2))");
    sub->add_option("--c0-phase", cfg.c0_phase, "Phase of c0 in radians");
    sub->add_option("--c1-phase", cfg.c1_phase, "Phase of c1 in radians");
    sub->add_option("--p", cfg.p, "Constituent |0> population p");
    sub->add_option("--phi", cfg.phi, "Constituent relative phase phi");
    sub->add_option("--omega", cfg.omega, "Coupling frequency omega");
    sub->add_option("--precision", cfg.precision, "Significant digits in data columns");
    sub->add_option("--out", cfg.out, "Output CSV path (stdout when omitted)");
    sub->add_option("--config", cfg.config, "JSON file with default values for any flag");
}

inline void add_theta_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--theta-steps", cfg.theta_steps, "Number of grid points");
    sub->add_option("--theta-min", cfg.theta_min, "First theta (radians)");
    sub->add_option("--theta-max", cfg.theta_max, "Last theta (radians)");
    sub->add_option("--t-max", cfg.t_max, "Last time; the grid runs over t in [0, t-max] with theta = omega t / N");
}

}  // namespace detail

/// Runs one CLI invocation. argv[0] is the program name.
inline int parse_and_dispatch(const std::vector<std::string>& argv, std::ostream& out = std::cout,
                              std::ostream& err = std::cerr) {
    CLI::App app{"Coarse-grained quantum measurement simulator", "cgmeas"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* prob_initial = app.add_subcommand("prob-initial", "Outcome probabilities at theta = 0 versus p");
    detail::add_sweep_options(prob_initial, cfg);
    prob_initial->add_option("--p-steps", cfg.p_steps, "Number of p grid points");
    prob_initial->add_option("--p-min", cfg.p_min, "First p");
    prob_initial->add_option("--p-max", cfg.p_max, "Last p");

    auto* prob_time = app.add_subcommand("prob-time", "Outcome probabilities versus theta or time");
    detail::add_sweep_options(prob_time, cfg);
    detail::add_theta_options(prob_time, cfg);

    auto* neg = app.add_subcommand("negativity", "System-apparatus negativity versus theta or time");
    detail::add_sweep_options(neg, cfg);
    detail::add_theta_options(neg, cfg);

    auto* coh = app.add_subcommand("coherences", "Apparatus coherence magnitudes versus theta or time");
    detail::add_sweep_options(coh, cfg);
    detail::add_theta_options(coh, cfg);

    auto* validate = app.add_subcommand("validate", "Run the built-in validation suite");
    validate->add_option("--out", cfg.out, "Write the report to this path as well as stdout");

    std::vector<std::string> args(argv.size() > 1 ? argv.begin() + 1 : argv.end(), argv.end());
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        const CLI::App* sub = app.get_subcommands().front();
        cfg.subcommand = sub->get_name();
        if (cfg.subcommand == "validate") {
            const ValidationReport report = run_validation();
            const std::string text = format_report(report);
            out << text;
            if (!cfg.out.empty()) {
                std::ofstream f(cfg.out);
                if (!f) throw UsageError(fmt::format("cannot open '{}' for writing", cfg.out));
                f << text;
            }
            return report.passed() ? kExitOk : kExitValidationFailed;
        }
        if (!cfg.config.empty()) {
            std::ifstream f(cfg.config);
            if (!f) throw UsageError(fmt::format("cannot read config file '{}'", cfg.config));
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(f);
            } catch (const nlohmann::json::exception& e) {
                throw UsageError(fmt::format("config file '{}': {}", cfg.config, e.what()));
            }
            detail::merge_json(cfg, j, *sub);
        }
        if (cfg.n_list.empty()) cfg.n_list = detail::default_n_list(cfg.subcommand);
        detail::check_config(cfg);

        // Compute fully before touching the output file.
        std::ostringstream csv;
        detail::run_sweep(cfg, csv);
        if (cfg.out.empty()) {
            out << csv.str();
        } else {
            std::ofstream f(cfg.out, std::ios::binary);
            if (!f) throw UsageError(fmt::format("cannot open '{}' for writing", cfg.out));
            f << csv.str();
        }
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace cgmeas::cli

#endif  // CGMEAS_CLI_HPP
