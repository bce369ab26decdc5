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

#ifndef CGMEAS_BINNING_HPP
#define CGMEAS_BINNING_HPP

#include <array>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include <fmt/format.h>

#include "cgmeas/errors.hpp"
#include "cgmeas/scaled_sum.hpp"

namespace cgmeas {

/// Effective magnetization outcome. Effective-space indices are ordered
/// (+1, 0, -1).
enum class Bin : int { Plus = +1, Zero = 0, Minus = -1 };

inline constexpr std::array<Bin, 3> kAllBins{Bin::Plus, Bin::Zero, Bin::Minus};

[[nodiscard]] constexpr int index_of(Bin b) {
    switch (b) {
        case Bin::Plus: return 0;
        case Bin::Zero: return 1;
        case Bin::Minus: return 2;
    }
    return -1;
}

[[nodiscard]] constexpr Bin bin_at(int index) { return kAllBins.at(static_cast<std::size_t>(index)); }

/// Outcome for a basis string with `zeros` constituents in |0>. The outer
/// intervals [0, N/3] and [2N/3, N] are closed, the middle one open; the
/// comparisons are done on 3*zeros so they are exact for every N.
[[nodiscard]] inline Bin bin_of(int zeros, int N) {
    if (N < 1 || zeros < 0 || zeros > N) {
        throw DomainError(fmt::format("zero-count {} outside [0, {}]", zeros, N));
    }
    if (3 * zeros >= 2 * N) return Bin::Plus;
    if (3 * zeros <= N) return Bin::Minus;
    return Bin::Zero;
}

[[nodiscard]] inline double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

/// Natural log of a multinomial coefficient.
struct LogMultinomial {
    double log_value = 0.0;
    [[nodiscard]] double value() const { return std::exp(log_value); }
};

[[nodiscard]] inline LogMultinomial log_multinomial(int N, std::span<const int> parts) {
    long long total = 0;
    double acc = log_factorial(N);
    for (int k : parts) {
        if (k < 0) throw DomainError(fmt::format("negative multinomial part {}", k));
        total += k;
        acc -= log_factorial(k);
    }
    if (total != N) throw DomainError(fmt::format("multinomial parts sum to {}, expected {}", total, N));
    return {acc};
}

[[nodiscard]] inline LogMultinomial log_multinomial(int N, std::initializer_list<int> parts) {
    return log_multinomial(N, std::span<const int>(parts.begin(), parts.size()));
}

/// Per-N tables shared by the closed-form evaluators: the bin of every
/// zero-count, log-factorials, log of the number of basis strings per bin,
/// and the off-diagonal normalization factors.
class BinTable {
   public:
    explicit BinTable(int N) : N_(N) {
        if (N < 1) throw DomainError(fmt::format("N = {} must be at least 1", N));
        bins_.reserve(static_cast<std::size_t>(N) + 1);
        log_fact_.reserve(static_cast<std::size_t>(N) + 1);
        for (int l = 0; l <= N; ++l) {
            bins_.push_back(bin_of(l, N));
            log_fact_.push_back(log_factorial(l));
        }
        std::array<ScaledSum, 3> counts;
        for (int l = 0; l <= N; ++l) counts[index_of(bins_[l])].add(log_binomial(l));
        for (int b = 0; b < 3; ++b) log_count_[b] = counts[b].log_abs();
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) {
                const bool usable = a != b && !empty(bin_at(a)) && !empty(bin_at(b));
                log_norm_[a][b] = usable ? -0.5 * (log_count_[a] + log_count_[b])
                                         : std::numeric_limits<double>::quiet_NaN();
            }
        }
    }

    [[nodiscard]] int N() const { return N_; }
    [[nodiscard]] Bin bin(int zeros) const { return bins_.at(static_cast<std::size_t>(zeros)); }
    [[nodiscard]] double log_fact(int k) const { return log_fact_[static_cast<std::size_t>(k)]; }
    [[nodiscard]] double log_binomial(int k) const { return log_fact(N_) - log_fact(k) - log_fact(N_ - k); }

    /// Zero-counts that fall in bin `b`, ascending.
    [[nodiscard]] std::vector<int> zero_counts_in(Bin b) const {
        std::vector<int> out;
        for (int l = 0; l <= N_; ++l) {
            if (bins_[l] == b) out.push_back(l);
        }
        return out;
    }

    [[nodiscard]] bool empty(Bin b) const { return std::isinf(log_count_[index_of(b)]); }

    /// log of the number of N-bit strings whose zero-count lies in `b`.
    [[nodiscard]] double log_string_count(Bin b) const { return log_count_[index_of(b)]; }

    [[nodiscard]] double log_normalization(Bin a, Bin b) const {
        if (a == b) throw DomainError("normalization factor is undefined for equal bins");
        const double v = log_norm_[index_of(a)][index_of(b)];
        if (std::isnan(v)) {
            throw DomainError(fmt::format("bin pair ({}, {}) has no basis strings at N = {}", static_cast<int>(a),
                                          static_cast<int>(b), N_));
        }
        return v;
    }

    [[nodiscard]] double normalization(Bin a, Bin b) const { return std::exp(log_normalization(a, b)); }

    /// Copy with every off-diagonal normalization factor multiplied by `factor`.
    /// Used to mutation-test the validation suite.
    [[nodiscard]] BinTable with_scaled_normalization(double factor) const {
        BinTable out = *this;
        for (auto& row : out.log_norm_) {
            for (double& v : row) v += std::log(factor);
        }
        return out;
    }

   private:
    int N_;
    std::vector<Bin> bins_;
    std::vector<double> log_fact_;
    std::array<double, 3> log_count_{};
    std::array<std::array<double, 3>, 3> log_norm_{};
};

/// (number of basis-string pairs with zero-counts in bins a and b)^(-1/2).
[[nodiscard]] inline double normalization_factor(Bin a, Bin b, int N) { return BinTable(N).normalization(a, b); }

}  // namespace cgmeas

#endif  // CGMEAS_BINNING_HPP
