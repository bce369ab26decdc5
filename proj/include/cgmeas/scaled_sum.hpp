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

#ifndef CGMEAS_SCALED_SUM_HPP
#define CGMEAS_SCALED_SUM_HPP

#include <cmath>
#include <complex>
#include <limits>

namespace cgmeas {

/// Accumulates terms given as (log-magnitude, unit phase) without overflow
/// or premature underflow. The running total is exp(scale) * (sum + comp);
/// whenever a term exceeds the current scale the partial sums are rescaled.
/// Real and imaginary parts use Neumaier compensation.
class ScaledSum {
   public:
    using Complex = std::complex<double>;

    /// Totals with magnitude below this are reported as exact zero.
    static constexpr double kZeroFloor = 1e-300;

    void add(double log_magnitude, Complex unit_phase = Complex(1.0, 0.0)) {
        if (log_magnitude == -std::numeric_limits<double>::infinity()) return;
        if (log_magnitude > scale_) {
            const double factor = empty() ? 0.0 : std::exp(scale_ - log_magnitude);
            sum_re_ *= factor;
            sum_im_ *= factor;
            comp_re_ *= factor;
            comp_im_ *= factor;
            scale_ = log_magnitude;
        }
        const Complex term = std::exp(log_magnitude - scale_) * unit_phase;
        accumulate(sum_re_, comp_re_, term.real());
        accumulate(sum_im_, comp_im_, term.imag());
    }

    [[nodiscard]] bool empty() const { return scale_ == -std::numeric_limits<double>::infinity(); }

    /// log of the total's magnitude; -inf when nothing (or an exact zero) was added.
    [[nodiscard]] double log_abs() const {
        const double mag = std::abs(Complex(sum_re_ + comp_re_, sum_im_ + comp_im_));
        if (empty() || mag == 0.0) return -std::numeric_limits<double>::infinity();
        return scale_ + std::log(mag);
    }

    /// exp(extra_log) times the accumulated total.
    [[nodiscard]] Complex value(double extra_log = 0.0) const {
        if (empty()) return {};
        const Complex total(sum_re_ + comp_re_, sum_im_ + comp_im_);
        const double mag = std::abs(total);
        if (mag == 0.0) return {};
        const double log_mag = scale_ + extra_log + std::log(mag);
        if (log_mag < std::log(kZeroFloor)) return {};
        return std::exp(scale_ + extra_log) * total;
    }

   private:
    static void accumulate(double& sum, double& comp, double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }

    double scale_ = -std::numeric_limits<double>::infinity();
    double sum_re_ = 0.0, sum_im_ = 0.0;
    double comp_re_ = 0.0, comp_im_ = 0.0;
};

}  // namespace cgmeas

#endif  // CGMEAS_SCALED_SUM_HPP
