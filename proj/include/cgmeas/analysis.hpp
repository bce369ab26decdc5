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

#ifndef CGMEAS_ANALYSIS_HPP
#define CGMEAS_ANALYSIS_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>

#include "cgmeas/binning.hpp"
#include "cgmeas/channel_closed.hpp"
#include "cgmeas/channel_exact.hpp"
#include "cgmeas/errors.hpp"
#include "cgmeas/linalg.hpp"
#include "cgmeas/model.hpp"

namespace cgmeas {

enum class SweepVariable { P, Theta, Time };

[[nodiscard]] inline std::string_view to_string(SweepVariable v) {
    switch (v) {
        case SweepVariable::P: return "p";
        case SweepVariable::Theta: return "theta";
        case SweepVariable::Time: return "time";
    }
    return "?";
}

namespace observable {
inline constexpr std::string_view pr_plus1 = "pr_plus1";
inline constexpr std::string_view pr_0 = "pr_0";
inline constexpr std::string_view pr_minus1 = "pr_minus1";
inline constexpr std::string_view negativity = "negativity";
inline constexpr std::string_view abs_10 = "abs_10";
inline constexpr std::string_view abs_1m1 = "abs_1m1";
inline constexpr std::string_view abs_0m1 = "abs_0m1";
}  // namespace observable

struct SweepSpec {
    SweepVariable variable = SweepVariable::Theta;
    std::vector<double> grid;
    ModelParams base;
    std::vector<int> n_list;

    void validate() const {
        if (n_list.empty()) throw DomainError("sweep needs at least one N");
        for (int n : n_list) {
            if (n < 1) throw DomainError(fmt::format("N = {} must be at least 1", n));
        }
        if (grid.empty()) throw DomainError("sweep grid is empty");
        for (std::size_t i = 1; i < grid.size(); ++i) {
            if (!(grid[i] > grid[i - 1])) {
                throw DomainError(fmt::format("sweep grid not strictly increasing at index {}", i));
            }
        }
    }

    /// Parameters at one grid point for one N.
    [[nodiscard]] ModelParams at(int N, double value) const {
        ModelParams out = base.with_n(N);
        switch (variable) {
            case SweepVariable::P: out.p = value; break;
            case SweepVariable::Theta: out.theta = value; break;
            case SweepVariable::Time: out = out.with_time(value); break;
        }
        return out;
    }
};

struct SweepRow {
    double sweep_value = 0.0;
    int N = 0;
    std::string observable;
    double value = 0.0;
    std::optional<double> imag;
};

/// Rows are ordered by N (in n_list order), then grid point, then observable.
struct SweepResult {
    SweepVariable variable = SweepVariable::Theta;
    std::vector<SweepRow> rows;
};

/// `count` evenly spaced points from lo to hi inclusive.
[[nodiscard]] inline std::vector<double> linspace(double lo, double hi, int count) {
    if (count < 1) throw DomainError("grid needs at least one point");
    std::vector<double> out(static_cast<std::size_t>(count));
    if (count == 1) {
        out[0] = lo;
        return out;
    }
    for (int k = 0; k < count; ++k) out[k] = lo + (hi - lo) * k / (count - 1);
    return out;
}

namespace detail {

inline void require_variable(const SweepSpec& spec, std::initializer_list<SweepVariable> allowed, const char* op) {
    if (std::find(allowed.begin(), allowed.end(), spec.variable) == allowed.end()) {
        throw DomainError(fmt::format("{} cannot sweep over {}", op, to_string(spec.variable)));
    }
}

inline void append_probabilities(SweepResult& out, double value, int N, const MagnetizationProbabilities& pr) {
    out.rows.push_back({value, N, std::string(observable::pr_plus1), pr.plus, std::nullopt});
    out.rows.push_back({value, N, std::string(observable::pr_0), pr.zero, std::nullopt});
    out.rows.push_back({value, N, std::string(observable::pr_minus1), pr.minus, std::nullopt});
}

}  // namespace detail

/// Outcome probabilities before the interaction (theta = 0) as a function of p.
[[nodiscard]] inline SweepResult sweep_initial_probabilities(const SweepSpec& spec) {
    spec.validate();
    detail::require_variable(spec, {SweepVariable::P}, "initial-probability sweep");
    SweepResult out{spec.variable, {}};
    for (int N : spec.n_list) {
        for (double p : spec.grid) {
            const ModelParams params = spec.at(N, p).with_theta(0.0);
            detail::append_probabilities(out, p, N, magnetization_probabilities(params));
        }
    }
    return out;
}

[[nodiscard]] inline SweepResult sweep_time_probabilities(const SweepSpec& spec) {
    spec.validate();
    detail::require_variable(spec, {SweepVariable::Theta, SweepVariable::Time}, "time-probability sweep");
    SweepResult out{spec.variable, {}};
    for (int N : spec.n_list) {
        for (double v : spec.grid) detail::append_probabilities(out, v, N, magnetization_probabilities(spec.at(N, v)));
    }
    return out;
}

[[nodiscard]] inline SweepResult sweep_negativity(const SweepSpec& spec) {
    spec.validate();
    detail::require_variable(spec, {SweepVariable::Theta, SweepVariable::Time}, "negativity sweep");
    for (int N : spec.n_list) detail::require_tensor_power_cost(N, "negativity sweep");
    SweepResult out{spec.variable, {}};
    for (int N : spec.n_list) {
        const BinTable table(N);
        for (double v : spec.grid) {
            const double neg = negativity(joint_effective_state(spec.at(N, v), table), 2, 3);
            out.rows.push_back({v, N, std::string(observable::negativity), neg, std::nullopt});
        }
    }
    return out;
}

/// Magnitudes of the three independent coherences of the apparatus state.
[[nodiscard]] inline SweepResult sweep_coherences(const SweepSpec& spec) {
    spec.validate();
    detail::require_variable(spec, {SweepVariable::Theta, SweepVariable::Time}, "coherence sweep");
    for (int N : spec.n_list) detail::require_tensor_power_cost(N, "coherence sweep");
    SweepResult out{spec.variable, {}};
    constexpr int plus = index_of(Bin::Plus), zero = index_of(Bin::Zero), minus = index_of(Bin::Minus);
    for (int N : spec.n_list) {
        const BinTable table(N);
        for (double v : spec.grid) {
            const EffectiveState rho = effective_apparatus_state(spec.at(N, v), table);
            out.rows.push_back({v, N, std::string(observable::abs_10), std::abs(rho(plus, zero)), std::nullopt});
            out.rows.push_back({v, N, std::string(observable::abs_1m1), std::abs(rho(plus, minus)), std::nullopt});
            out.rows.push_back({v, N, std::string(observable::abs_0m1), std::abs(rho(zero, minus)), std::nullopt});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Validation runner

struct ValidationCheck {
    std::string name;
    bool passed = false;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;

    [[nodiscard]] bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
    }
};

struct ValidationOptions {
    std::vector<int> oracle_ns{3, 4, 6, 9, 12};
    int oracle_theta_points = 33;  // k pi / 16, k = 0..32
    std::vector<double> oracle_ps{0.3, 0.5};
    std::vector<double> oracle_c0s{1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt3};
    std::vector<int> choi_ns{3, 6, 9};
    /// Multiplies every closed-form normalization factor; 1 for a real run.
    double normalization_scale = 1.0;
};

struct StateDefects {
    double hermiticity = 0.0;
    double trace = 0.0;
    double min_eigenvalue = 0.0;
};

template <typename Derived>
[[nodiscard]] StateDefects state_defects(const Eigen::MatrixBase<Derived>& m) {
    return {hermiticity_defect(m), std::abs(Complex(m.trace()) - Complex(1.0)), hermitian_eigenvalues(m, 1e-6).min()};
}

[[nodiscard]] inline ModelParams real_amplitude_params(double c0, double p, int N, double theta) {
    ModelParams params;
    params.c0 = c0;
    params.c1 = std::sqrt(std::max(0.0, 1.0 - c0 * c0));
    params.p = p;
    params.N = N;
    params.theta = theta;
    return params;
}

[[nodiscard]] inline ValidationReport run_validation(const ValidationOptions& opt = {}) {
    ValidationReport report;
    constexpr double pi = std::numbers::pi;

    {
        double worst = 0.0;
        double worst_phys = 0.0;
        std::string where;
        std::size_t comparisons = 0;
        for (int N : opt.oracle_ns) {
            const BinTable table = BinTable(N).with_scaled_normalization(opt.normalization_scale);
            for (double p : opt.oracle_ps) {
                for (double c0 : opt.oracle_c0s) {
                    for (int k = 0; k < opt.oracle_theta_points; ++k) {
                        const ModelParams params = real_amplitude_params(c0, p, N, k * pi / 16.0);
                        const JointEffectiveState exact_joint = joint_effective_exact(params);
                        const EffectiveState exact_eff = exact_joint.block<3, 3>(0, 0) + exact_joint.block<3, 3>(3, 3);
                        const JointEffectiveState closed_joint = joint_effective_state(params, table);
                        const EffectiveState closed_eff = effective_apparatus_state(params, table);
                        const double d = std::max((closed_joint - exact_joint).cwiseAbs().maxCoeff(),
                                                  (closed_eff - exact_eff).cwiseAbs().maxCoeff());
                        comparisons += 2;
                        if (d > worst) {
                            worst = d;
                            where = fmt::format("N={} p={} c0={:.6f} theta={}pi/16", N, p, c0, k);
                        }
                        for (const auto& s : {state_defects(closed_joint), state_defects(closed_eff)}) {
                            worst_phys = std::max({worst_phys, s.hermiticity / 1e-10, s.trace / 1e-10,
                                                   -s.min_eigenvalue / 1e-8});
                        }
                    }
                }
            }
        }
        report.checks.push_back({"oracle_equivalence", worst <= 1e-9, worst, 1e-9,
                                 fmt::format("{} matrix comparisons; worst at {}", comparisons, where)});
        report.checks.push_back({"physicality", worst_phys <= 1.0, worst_phys, 1.0,
                                 "worst defect as a fraction of its tolerance (herm 1e-10, trace 1e-10, psd -1e-8)"});
    }

    for (int N : opt.choi_ns) {
        const ChoiMatrix choi = choi_matrix(N);
        const StateDefects s = state_defects(choi.matrix);
        const bool ok = s.min_eigenvalue >= -1e-10 && s.trace <= 1e-10 && s.hermiticity <= 1e-10;
        report.checks.push_back({fmt::format("complete_positivity_N{}", N), ok, s.min_eigenvalue, -1e-10,
                                 fmt::format("dim {}; trace defect {:.2e}", choi.matrix.rows(), s.trace)});
    }

    {
        double worst = 0.0;
        for (int N : {6, 50, 500}) {
            for (double theta : linspace(0.0, 2.0 * pi, 65)) {
                worst = std::max(worst, std::abs(
                    magnetization_probabilities(real_amplitude_params(1.0 / std::numbers::sqrt3, 0.5, N, theta))
                        .total() - 1.0));
            }
        }
        report.checks.push_back({"probability_normalization", worst <= 1e-12, worst, 1e-12, "N in {6, 50, 500}"});
    }

    {
        double worst = 0.0;
        for (int N : {50, 500}) {
            for (double c0 : {1.0 / std::numbers::sqrt3, 1.0 / std::numbers::sqrt2}) {
                const ModelParams params = real_amplitude_params(c0, 0.5, N, pi / 2.0);
                const auto pr = magnetization_probabilities(params);
                worst = std::max({worst, std::abs(pr.plus - std::norm(params.c0)),
                                  std::abs(pr.minus - std::norm(params.c1))});
            }
        }
        report.checks.push_back({"plateau_exactness", worst <= 1e-10, worst, 1e-10, "theta = pi/2, N in {50, 500}"});
    }

    {
        double worst = 0.0;
        for (int N : {4, 6, 12}) {
            for (double c0 : opt.oracle_c0s) {
                for (double theta : {0.0, pi, 2.0 * pi}) {
                    worst = std::max(worst, negativity(joint_effective_state(real_amplitude_params(c0, 0.5, N, theta)), 2, 3));
                }
            }
        }
        report.checks.push_back({"separability_theta_0_pi_2pi", worst <= 1e-6, worst, 1e-6, "N in {4, 6, 12}"});
    }

    return report;
}

[[nodiscard]] inline std::string format_report(const ValidationReport& report) {
    std::string out;
    for (const auto& c : report.checks) {
        out += fmt::format("{} {:<30} measured={:.3e} tol={:.1e}  {}\n", c.passed ? "PASS" : "FAIL", c.name,
                           c.measured, c.tolerance, c.detail);
    }
    out += report.passed() ? "all checks passed\n" : "VALIDATION FAILED\n";
    return out;
}

}  // namespace cgmeas

#endif  // CGMEAS_ANALYSIS_HPP
