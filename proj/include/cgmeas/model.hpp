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

#ifndef CGMEAS_MODEL_HPP
#define CGMEAS_MODEL_HPP

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include <fmt/format.h>

#include "cgmeas/errors.hpp"

namespace cgmeas {

using Complex = std::complex<double>;

/// Direction of the conditioned rotation: +theta when the system qubit is
/// |0>, -theta when it is |1>.
enum class Branch : int { Plus = +1, Minus = -1 };

[[nodiscard]] constexpr double sign_of(Branch b) { return b == Branch::Plus ? 1.0 : -1.0; }

/// Physical inputs of the measurement model.
///
/// The system qubit starts in c0|0> + c1|1>; each of the N apparatus
/// constituents starts in sqrt(p)|0> + sqrt(1-p) e^{i phi}|1>. The coupling
/// rotates every constituent about x by +theta or -theta, theta = omega t / N.
struct ModelParams {
    Complex c0{std::numbers::sqrt2 / 2.0, 0.0};
    Complex c1{std::numbers::sqrt2 / 2.0, 0.0};
    double p = 0.5;
    double phi = std::numbers::pi / 2.0;
    int N = 1;
    double omega = 1.0;
    double theta = 0.0;

    [[nodiscard]] double time() const { return theta * N / omega; }

    [[nodiscard]] ModelParams with_theta(double value) const {
        ModelParams out = *this;
        out.theta = value;
        return out;
    }

    [[nodiscard]] ModelParams with_time(double t) const { return with_theta(omega * t / N); }

    [[nodiscard]] ModelParams with_n(int n) const {
        ModelParams out = *this;
        out.N = n;
        return out;
    }

    [[nodiscard]] Complex amplitude(Branch b) const { return b == Branch::Plus ? c0 : c1; }

    void validate() const {
        const double norm = std::norm(c0) + std::norm(c1);
        if (!(std::abs(norm - 1.0) <= 1e-12)) {
            throw DomainError(fmt::format("|c0|^2 + |c1|^2 = {:.17g}, expected 1", norm));
        }
        if (!(p >= 0.0 && p <= 1.0)) throw DomainError(fmt::format("p = {} outside [0, 1]", p));
        if (N < 1) throw DomainError(fmt::format("N = {} must be at least 1", N));
        if (!std::isfinite(phi) || !std::isfinite(theta)) throw DomainError("phi and theta must be finite");
        if (!std::isfinite(omega) || omega == 0.0) throw DomainError("omega must be finite and nonzero");
    }
};

/// Single-constituent 2x2 operator in the computational basis {|0>, |1>}.
struct BranchMatrix {
    Complex m00{}, m01{}, m10{}, m11{};

    [[nodiscard]] BranchMatrix adjoint() const {
        return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
    }
    [[nodiscard]] Complex trace() const { return m00 + m11; }
    [[nodiscard]] Complex det() const { return m00 * m11 - m01 * m10; }
    [[nodiscard]] double max_abs() const {
        return std::max({std::abs(m00), std::abs(m01), std::abs(m10), std::abs(m11)});
    }
    [[nodiscard]] std::array<Complex, 4> entries() const { return {m00, m01, m10, m11}; }
};

namespace detail {

using Ket2 = std::array<Complex, 2>;

inline Ket2 constituent_ket(double p, double phi) {
    return {Complex(std::sqrt(p), 0.0), std::sqrt(1.0 - p) * std::polar(1.0, phi)};
}

/// exp(-i angle sigma_x / 2) applied to a single-qubit ket.
inline Ket2 rotate_x(const Ket2& v, double angle) {
    const double c = std::cos(angle / 2.0);
    const Complex s(0.0, -std::sin(angle / 2.0));
    return {c * v[0] + s * v[1], s * v[0] + c * v[1]};
}

}  // namespace detail

/// The rotated constituent projector [[x, conj(x_c)], [x_c, 1 - x]] with
/// theta replaced by sign(branch) * theta.
[[nodiscard]] inline BranchMatrix branch_entries(const ModelParams& params, Branch branch) {
    params.validate();
    const double th = sign_of(branch) * params.theta;
    const double p = params.p;
    const double sq = std::sqrt(p * (1.0 - p));
    const double x = 0.5 + (p - 0.5) * std::cos(th) + sq * std::sin(th) * std::sin(params.phi);
    const Complex xc = 0.5 * Complex(2.0 * sq * std::cos(params.phi),
                                     (1.0 - 2.0 * p) * std::sin(th) + 2.0 * sq * std::cos(th) * std::sin(params.phi));
    return {Complex(x, 0.0), std::conj(xc), xc, Complex(1.0 - x, 0.0)};
}

/// R(ket * theta)|Psi><Psi|R(bra * theta)^dagger for a single constituent.
[[nodiscard]] inline BranchMatrix cross_branch_matrix(const ModelParams& params, Branch ket, Branch bra) {
    params.validate();
    const auto psi = detail::constituent_ket(params.p, params.phi);
    const auto k = detail::rotate_x(psi, sign_of(ket) * params.theta);
    const auto b = detail::rotate_x(psi, sign_of(bra) * params.theta);
    return {k[0] * std::conj(b[0]), k[0] * std::conj(b[1]), k[1] * std::conj(b[0]), k[1] * std::conj(b[1])};
}

}  // namespace cgmeas

#endif  // CGMEAS_MODEL_HPP
