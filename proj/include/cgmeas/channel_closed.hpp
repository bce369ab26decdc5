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

#ifndef CGMEAS_CHANNEL_CLOSED_HPP
#define CGMEAS_CHANNEL_CLOSED_HPP

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "cgmeas/binning.hpp"
#include "cgmeas/errors.hpp"
#include "cgmeas/model.hpp"
#include "cgmeas/scaled_sum.hpp"
#include "cgmeas/states.hpp"

namespace cgmeas {

/// Largest N for which coherence-bearing quantities are evaluated; the
/// off-diagonal sums cost O(N^3) terms per entry.
inline constexpr int kCoherenceMaxN = 99;

struct MagnetizationProbabilities {
    double plus = 0.0;
    double zero = 0.0;
    double minus = 0.0;

    [[nodiscard]] double at(Bin b) const {
        switch (b) {
            case Bin::Plus: return plus;
            case Bin::Zero: return zero;
            case Bin::Minus: return minus;
        }
        return 0.0;
    }
    [[nodiscard]] double total() const { return plus + zero + minus; }
};

namespace detail {

/// k-th powers of one complex entry as (log|z|^k, phase^k), with 0^0 = 1.
class PowerTable {
   public:
    PowerTable(Complex z, int max_power) : log_(static_cast<std::size_t>(max_power) + 1),
                                           phase_(static_cast<std::size_t>(max_power) + 1) {
        const double mag = std::abs(z);
        const double log_mag = mag > 0.0 ? std::log(mag) : -std::numeric_limits<double>::infinity();
        const double arg = mag > 0.0 ? std::arg(z) : 0.0;
        for (int k = 0; k <= max_power; ++k) {
            log_[k] = k == 0 ? 0.0 : k * log_mag;
            phase_[k] = std::polar(1.0, k * arg);
        }
    }
    [[nodiscard]] double log(int k) const { return log_[static_cast<std::size_t>(k)]; }
    [[nodiscard]] Complex phase(int k) const { return phase_[static_cast<std::size_t>(k)]; }

   private:
    std::vector<double> log_;
    std::vector<Complex> phase_;
};

inline void require_tensor_power_cost(int N, const char* what) {
    if (N > kCoherenceMaxN) {
        throw ScaleError(fmt::format("{} at N = {} exceeds the coherence cost guard (N <= {}); "
                                     "use the probability-only mode for larger N",
                                     what, N, kCoherenceMaxN));
    }
}

}  // namespace detail

/// The coarse-grained image of the N-fold tensor power of a single-constituent
/// 2x2 matrix, evaluated by grouping basis-pair contributions by how many
/// constituents sit in each of the four entries (k00, k01, k10, k11).
///
/// Diagonal entry B sums C(N,l) m00^l m11^(N-l) over zero-counts l in B.
/// Off-diagonal entry (A,B) sums multinomial(N; k00,k01,k10,k11) times the
/// entry powers over 4-counts with row zero-count k00+k01 in A and column
/// zero-count k00+k10 in B, scaled by the pair normalization factor.
[[nodiscard]] inline EffectiveState coarse_grained_power(const BranchMatrix& m, const BinTable& table) {
    constexpr double kEntryBound = 1.0 + 1e-12;
    if (!(m.max_abs() <= kEntryBound)) {
        throw DomainError(fmt::format("branch matrix entry modulus {} exceeds 1", m.max_abs()));
    }
    const int N = table.N();
    const detail::PowerTable p00(m.m00, N), p01(m.m01, N), p10(m.m10, N), p11(m.m11, N);

    std::array<std::vector<int>, 3> members;
    for (Bin b : kAllBins) members[index_of(b)] = table.zero_counts_in(b);

    EffectiveState out = EffectiveState::Zero();
    for (Bin b : kAllBins) {
        ScaledSum acc;
        for (int l : members[index_of(b)]) {
            acc.add(table.log_binomial(l) + p00.log(l) + p11.log(N - l), p00.phase(l) * p11.phase(N - l));
        }
        out(index_of(b), index_of(b)) = acc.value();
    }

    const double log_n_fact = table.log_fact(N);
    for (Bin a : kAllBins) {
        for (Bin b : kAllBins) {
            if (a == b) continue;
            const auto& rows = members[index_of(a)];
            const auto& cols = members[index_of(b)];
            if (rows.empty() || cols.empty()) continue;
            ScaledSum acc;
            for (int r : rows) {
                for (int c : cols) {
                    // k01 = r - k00, k10 = c - k00, k11 = N - r - c + k00, all >= 0.
                    const int lo = std::max(0, r + c - N);
                    const int hi = std::min(r, c);
                    for (int k00 = lo; k00 <= hi; ++k00) {
                        const int k01 = r - k00;
                        const int k10 = c - k00;
                        const int k11 = N - r - c + k00;
                        const double log_term = log_n_fact - table.log_fact(k00) - table.log_fact(k01) -
                                                table.log_fact(k10) - table.log_fact(k11) + p00.log(k00) +
                                                p01.log(k01) + p10.log(k10) + p11.log(k11);
                        acc.add(log_term, p00.phase(k00) * p01.phase(k01) * p10.phase(k10) * p11.phase(k11));
                    }
                }
            }
            out(index_of(a), index_of(b)) = acc.value(table.log_normalization(a, b));
        }
    }
    return out;
}

[[nodiscard]] inline EffectiveState coarse_grained_power(const BranchMatrix& m, int N) {
    return coarse_grained_power(m, BinTable(N));
}

namespace detail {
inline void require_table_matches(const ModelParams& params, const BinTable& table) {
    if (table.N() != params.N) {
        throw DomainError(fmt::format("bin table built for N = {} but parameters have N = {}", table.N(), params.N));
    }
}
}  // namespace detail

[[nodiscard]] inline EffectiveState effective_apparatus_state(const ModelParams& params, const BinTable& table) {
    params.validate();
    detail::require_table_matches(params, table);
    return std::norm(params.c0) * coarse_grained_power(branch_entries(params, Branch::Plus), table) +
           std::norm(params.c1) * coarse_grained_power(branch_entries(params, Branch::Minus), table);
}

/// Apparatus state after coarse graining with the system traced out.
[[nodiscard]] inline EffectiveState effective_apparatus_state(const ModelParams& params) {
    return effective_apparatus_state(params, BinTable(params.N));
}

[[nodiscard]] inline JointEffectiveState joint_effective_state(const ModelParams& params, const BinTable& table) {
    params.validate();
    detail::require_tensor_power_cost(params.N, "joint effective state");
    detail::require_table_matches(params, table);
    constexpr std::array<Branch, 2> branches{Branch::Plus, Branch::Minus};
    JointEffectiveState out;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            const Complex weight = params.amplitude(branches[a]) * std::conj(params.amplitude(branches[b]));
            const BranchMatrix m = cross_branch_matrix(params, branches[a], branches[b]);
            out.block<3, 3>(3 * a, 3 * b) = weight * coarse_grained_power(m, table);
        }
    }
    return out;
}

/// System plus coarse-grained apparatus: block (a, b) is
/// c_a conj(c_b) times the coarse-grained image of the cross-branch tensor power.
[[nodiscard]] inline JointEffectiveState joint_effective_state(const ModelParams& params) {
    return joint_effective_state(params, BinTable(params.N));
}

/// Diagonal of the effective apparatus state via O(N) binomial sums; no
/// coherence terms are evaluated, so there is no size guard.
[[nodiscard]] inline MagnetizationProbabilities magnetization_probabilities(const ModelParams& params) {
    params.validate();
    const BinTable table(params.N);
    const int N = params.N;
    auto bin_masses = [&](double x) {
        const double lx = x > 0.0 ? std::log(x) : -std::numeric_limits<double>::infinity();
        const double ly = x < 1.0 ? std::log1p(-x) : -std::numeric_limits<double>::infinity();
        std::array<ScaledSum, 3> acc;
        for (int l = 0; l <= N; ++l) {
            const double log_term = table.log_binomial(l) + (l == 0 ? 0.0 : l * lx) + (l == N ? 0.0 : (N - l) * ly);
            acc[index_of(table.bin(l))].add(log_term);
        }
        return std::array<double, 3>{acc[0].value().real(), acc[1].value().real(), acc[2].value().real()};
    };
    // Clamp tiny excursions of the printed formula outside [0, 1].
    auto clamp01 = [](double v) { return std::min(1.0, std::max(0.0, v)); };
    const double x = clamp01(branch_entries(params, Branch::Plus).m00.real());
    const double y = clamp01(branch_entries(params, Branch::Minus).m00.real());
    const auto mx = bin_masses(x);
    const auto my = bin_masses(y);
    const double w0 = std::norm(params.c0);
    const double w1 = std::norm(params.c1);
    return {w0 * mx[0] + w1 * my[0], w0 * mx[1] + w1 * my[1], w0 * mx[2] + w1 * my[2]};
}

}  // namespace cgmeas

#endif  // CGMEAS_CHANNEL_CLOSED_HPP
