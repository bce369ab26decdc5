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

#ifndef CGMEAS_LINALG_HPP
#define CGMEAS_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "cgmeas/errors.hpp"

namespace cgmeas {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Real eigenvalues of a Hermitian matrix, sorted in descending order.
struct Spectrum {
    std::vector<double> eigenvalues;

    [[nodiscard]] double max() const { return eigenvalues.front(); }
    [[nodiscard]] double min() const { return eigenvalues.back(); }
    [[nodiscard]] double sum() const {
        double s = 0.0;
        for (double v : eigenvalues) s += v;
        return s;
    }
    [[nodiscard]] std::size_t size() const { return eigenvalues.size(); }
};

namespace tolerance {
inline constexpr double hermitian = 1e-10;
inline constexpr double trace = 1e-10;
inline constexpr double positivity = 1e-10;
/// Partial-transpose eigenvalues in (-negativity_floor, 0) are roundoff.
inline constexpr double negativity_floor = 1e-12;
}  // namespace tolerance

/// Largest entrywise deviation |m(i,j) - conj(m(j,i))|.
template <typename Derived>
[[nodiscard]] double hermiticity_defect(const Eigen::MatrixBase<Derived>& m) {
    if (m.rows() != m.cols()) {
        throw DimensionError(fmt::format("matrix is {}x{}, expected square", m.rows(), m.cols()));
    }
    double worst = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = i; j < m.cols(); ++j) {
            worst = std::max(worst, std::abs(Complex(m(i, j)) - std::conj(Complex(m(j, i)))));
        }
    }
    return worst;
}

template <typename Derived>
[[nodiscard]] Spectrum hermitian_eigenvalues(const Eigen::MatrixBase<Derived>& m,
                                             double symmetry_tol = tolerance::hermitian) {
    const double defect = hermiticity_defect(m);
    if (defect > symmetry_tol) {
        throw SymmetryError(
            fmt::format("matrix is not Hermitian: max |m - m^H| = {:.3e} > {:.1e}", defect, symmetry_tol));
    }
    if (m.rows() == 0) return {};
    // Symmetrize so the solver sees an exactly Hermitian input.
    const ComplexMatrix h = (m.template cast<Complex>() + m.template cast<Complex>().adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw Error("Hermitian eigensolver did not converge");
    }
    Spectrum out;
    out.eigenvalues.assign(solver.eigenvalues().begin(), solver.eigenvalues().end());
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());
    return out;
}

/// Transposes the first tensor factor of a (dim_a * dim_b)-square matrix:
/// block (a, a') of size dim_b x dim_b is swapped with block (a', a).
template <typename Derived>
[[nodiscard]] ComplexMatrix partial_transpose_system(const Eigen::MatrixBase<Derived>& m, Eigen::Index dim_a,
                                                     Eigen::Index dim_b) {
    const Eigen::Index d = dim_a * dim_b;
    if (dim_a <= 0 || dim_b <= 0 || m.rows() != d || m.cols() != d) {
        throw DimensionError(fmt::format("partial transpose: matrix is {}x{}, expected {}x{} for dims ({}, {})",
                                         m.rows(), m.cols(), d, d, dim_a, dim_b));
    }
    ComplexMatrix out(d, d);
    for (Eigen::Index a = 0; a < dim_a; ++a) {
        for (Eigen::Index ap = 0; ap < dim_a; ++ap) {
            out.block(a * dim_b, ap * dim_b, dim_b, dim_b) = m.block(ap * dim_b, a * dim_b, dim_b, dim_b);
        }
    }
    return out;
}

/// Checks the density-matrix preconditions and throws PhysicalityError
/// naming the first one violated.
template <typename Derived>
void require_density_matrix(const Eigen::MatrixBase<Derived>& m, double trace_tol = tolerance::trace,
                            double positivity_tol = tolerance::positivity) {
    const double defect = hermiticity_defect(m);
    if (defect > tolerance::hermitian) {
        throw PhysicalityError(fmt::format("not Hermitian: max |m - m^H| = {:.3e}", defect));
    }
    const Complex tr = m.trace();
    if (std::abs(tr - Complex(1.0)) > trace_tol) {
        throw PhysicalityError(fmt::format("trace is {:.17g}{:+.3e}i, expected 1", tr.real(), tr.imag()));
    }
    const double lo = hermitian_eigenvalues(m).min();
    if (lo < -positivity_tol) {
        throw PhysicalityError(fmt::format("not positive semidefinite: min eigenvalue {:.3e}", lo));
    }
}

/// Trace norm of the partial transpose minus one, evaluated as twice the
/// magnitude of the negative part of the spectrum.
template <typename Derived>
[[nodiscard]] double negativity(const Eigen::MatrixBase<Derived>& m, Eigen::Index dim_a, Eigen::Index dim_b) {
    require_density_matrix(m);
    const Spectrum s = hermitian_eigenvalues(partial_transpose_system(m, dim_a, dim_b));
    double negative_mass = 0.0;
    for (double v : s.eigenvalues) {
        if (v <= -tolerance::negativity_floor) negative_mass -= v;
    }
    return 2.0 * negative_mass;
}

}  // namespace cgmeas

#endif  // CGMEAS_LINALG_HPP
