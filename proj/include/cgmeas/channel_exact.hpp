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

#ifndef CGMEAS_CHANNEL_EXACT_HPP
#define CGMEAS_CHANNEL_EXACT_HPP

#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "cgmeas/binning.hpp"
#include "cgmeas/errors.hpp"
#include "cgmeas/linalg.hpp"
#include "cgmeas/model.hpp"
#include "cgmeas/states.hpp"

namespace cgmeas {

inline constexpr int kExactMaxN = 12;
inline constexpr int kChoiMaxN = 9;

/// Operator on the full 2^N-dimensional apparatus space. Basis index bit
/// (N-1-q) holds the state of constituent q.
class FullApparatusOperator {
   public:
    FullApparatusOperator(int N, ComplexMatrix op) : N_(N), op_(std::move(op)) {
        if (N < 1 || N > kExactMaxN) {
            throw ScaleError(fmt::format("exact channel supports 1 <= N <= {}, got N = {}; use the closed-form path",
                                         kExactMaxN, N));
        }
        const Eigen::Index dim = Eigen::Index{1} << N;
        if (op_.rows() != dim || op_.cols() != dim) {
            throw DimensionError(fmt::format("apparatus operator is {}x{}, expected {}x{}", op_.rows(), op_.cols(), dim, dim));
        }
    }

    [[nodiscard]] int N() const { return N_; }
    [[nodiscard]] const ComplexMatrix& matrix() const { return op_; }

   private:
    int N_;
    ComplexMatrix op_;
};

namespace exact {

/// Bin of every basis string, found by counting zero bits.
inline std::vector<Bin> basis_bins(int N) {
    const std::uint32_t dim = 1u << N;
    std::vector<Bin> out(dim);
    for (std::uint32_t i = 0; i < dim; ++i) out[i] = bin_of(N - std::popcount(i), N);
    return out;
}

/// Normalization factors from a direct count of basis strings per bin.
class PairWeights {
   public:
    explicit PairWeights(const std::vector<Bin>& bins) {
        std::array<double, 3> count{};
        for (Bin b : bins) count[index_of(b)] += 1.0;
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) {
                w_[a][b] = (a != b && count[a] > 0 && count[b] > 0) ? 1.0 / std::sqrt(count[a] * count[b]) : 0.0;
            }
        }
    }
    [[nodiscard]] double operator()(Bin a, Bin b) const { return w_[index_of(a)][index_of(b)]; }

   private:
    std::array<std::array<double, 3>, 3> w_{};
};

inline void require_exact_n(int N) {
    if (N < 1 || N > kExactMaxN) {
        throw ScaleError(fmt::format("exact channel supports 1 <= N <= {}, got N = {}; use the closed-form path",
                                     kExactMaxN, N));
    }
}

/// Image of the single basis element |i><j|.
inline EffectiveState basis_image(std::uint32_t i, std::uint32_t j, const std::vector<Bin>& bins,
                                  const PairWeights& w) {
    EffectiveState out = EffectiveState::Zero();
    const Bin bi = bins[i];
    const Bin bj = bins[j];
    if (i == j) {
        out(index_of(bi), index_of(bi)) = 1.0;
    } else if (bi != bj) {
        out(index_of(bi), index_of(bj)) = w(bi, bj);
    }
    return out;
}

/// Single-qubit gate applied to every constituent of a 2^N state vector.
inline Eigen::VectorXcd apply_to_every_qubit(Eigen::VectorXcd v, const Eigen::Matrix2cd& gate, int N) {
    const Eigen::Index dim = v.size();
    for (int q = 0; q < N; ++q) {
        const Eigen::Index stride = Eigen::Index{1} << (N - 1 - q);
        for (Eigen::Index base = 0; base < dim; ++base) {
            if (base & stride) continue;
            const Complex a = v[base];
            const Complex b = v[base + stride];
            v[base] = gate(0, 0) * a + gate(0, 1) * b;
            v[base + stride] = gate(1, 0) * a + gate(1, 1) * b;
        }
    }
    return v;
}

/// Apparatus ket after the conditioned rotation on branch `branch`.
inline Eigen::VectorXcd rotated_apparatus_ket(const ModelParams& params, Branch branch) {
    const int N = params.N;
    Eigen::Vector2cd psi(std::sqrt(params.p), std::sqrt(1.0 - params.p) * std::polar(1.0, params.phi));
    // |Psi>^{(x) N}
    Eigen::VectorXcd v = Eigen::VectorXcd::Ones(Eigen::Index{1} << N);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        for (int q = 0; q < N; ++q) v[i] *= psi[(i >> (N - 1 - q)) & 1];
    }
    const double half = sign_of(branch) * params.theta / 2.0;
    Eigen::Matrix2cd rot;
    rot << std::cos(half), Complex(0.0, -std::sin(half)), Complex(0.0, -std::sin(half)), std::cos(half);
    return apply_to_every_qubit(std::move(v), rot, N);
}

}  // namespace exact

/// Coarse graining of an arbitrary apparatus operator by a sweep over all
/// 4^N basis pairs.
[[nodiscard]] inline EffectiveState apply_channel_exact(const FullApparatusOperator& op) {
    const int N = op.N();
    const auto bins = exact::basis_bins(N);
    const exact::PairWeights w(bins);
    const auto& m = op.matrix();
    EffectiveState out = EffectiveState::Zero();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const Bin bi = bins[i];
            const Bin bj = bins[j];
            if (i == j) {
                out(index_of(bi), index_of(bi)) += m(i, j);
            } else if (bi != bj) {
                out(index_of(bi), index_of(bj)) += m(i, j) * w(bi, bj);
            }
        }
    }
    return out;
}

/// Coarse graining of the rank-one operator |ket><bra|, grouping basis
/// pairs by bin so the cost is O(2^N).
[[nodiscard]] inline EffectiveState apply_channel_exact_outer(int N, const Eigen::VectorXcd& ket,
                                                              const Eigen::VectorXcd& bra) {
    exact::require_exact_n(N);
    const Eigen::Index dim = Eigen::Index{1} << N;
    if (ket.size() != dim || bra.size() != dim) {
        throw DimensionError(fmt::format("vectors have sizes {} and {}, expected {}", ket.size(), bra.size(), dim));
    }
    const auto bins = exact::basis_bins(N);
    const exact::PairWeights w(bins);
    std::array<Complex, 3> ket_sum{}, bra_sum{}, diag{};
    for (Eigen::Index i = 0; i < dim; ++i) {
        const int b = index_of(bins[i]);
        ket_sum[b] += ket[i];
        bra_sum[b] += bra[i];
        diag[b] += ket[i] * std::conj(bra[i]);
    }
    EffectiveState out = EffectiveState::Zero();
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            out(a, b) = a == b ? diag[a] : ket_sum[a] * std::conj(bra_sum[b]) * w(bin_at(a), bin_at(b));
        }
    }
    return out;
}

/// Joint system + coarse-grained apparatus state from explicit 2^N state
/// vectors; the reference the closed-form evaluation is checked against.
[[nodiscard]] inline JointEffectiveState joint_effective_exact(const ModelParams& params) {
    params.validate();
    exact::require_exact_n(params.N);
    const std::array<Eigen::VectorXcd, 2> kets{exact::rotated_apparatus_ket(params, Branch::Plus),
                                               exact::rotated_apparatus_ket(params, Branch::Minus)};
    const std::array<Complex, 2> amps{params.c0, params.c1};
    JointEffectiveState out;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            out.block<3, 3>(3 * a, 3 * b) =
                amps[a] * std::conj(amps[b]) * apply_channel_exact_outer(params.N, kets[a], kets[b]);
        }
    }
    return out;
}

/// Apparatus-only exact state: trace of the joint state over the system.
[[nodiscard]] inline EffectiveState effective_apparatus_exact(const ModelParams& params) {
    const JointEffectiveState j = joint_effective_exact(params);
    return j.block<3, 3>(0, 0) + j.block<3, 3>(3, 3);
}

struct ChoiMatrix {
    int input_qubits = 0;
    ComplexMatrix matrix;
};

/// Choi matrix (1 (x) channel)(|Phi+><Phi+|) of any linear map on
/// `input_qubits` qubits, given the image of each basis element |i><j|.
/// Row index is (input basis index) * out_dim + (output index).
template <typename BasisImage>
[[nodiscard]] ChoiMatrix choi_matrix_of(int input_qubits, Eigen::Index out_dim, BasisImage&& image) {
    const Eigen::Index in_dim = Eigen::Index{1} << input_qubits;
    ChoiMatrix out{input_qubits, ComplexMatrix::Zero(in_dim * out_dim, in_dim * out_dim)};
    const double scale = 1.0 / static_cast<double>(in_dim);
    for (Eigen::Index i = 0; i < in_dim; ++i) {
        for (Eigen::Index j = 0; j < in_dim; ++j) {
            const auto img = image(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
            out.matrix.block(i * out_dim, j * out_dim, out_dim, out_dim) = scale * img;
        }
    }
    return out;
}

/// Choi matrix of the three-bin coarse graining on N constituents.
[[nodiscard]] inline ChoiMatrix choi_matrix(int N) {
    if (N < 1 || N > kChoiMaxN) {
        throw ScaleError(fmt::format("Choi matrix supports 1 <= N <= {}, got N = {}", kChoiMaxN, N));
    }
    const auto bins = exact::basis_bins(N);
    const exact::PairWeights w(bins);
    return choi_matrix_of(N, 3, [&](std::uint32_t i, std::uint32_t j) { return exact::basis_image(i, j, bins, w); });
}

}  // namespace cgmeas

#endif  // CGMEAS_CHANNEL_EXACT_HPP
