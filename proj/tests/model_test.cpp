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

#include "cgmeas/model.hpp"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

#include "test_util.hpp"

using namespace cgmeas;
using cgmeas::testing::uniform;

namespace {

constexpr double kPi = std::numbers::pi;

ModelParams params_at(double p, double phi, double theta) {
    ModelParams m;
    m.p = p;
    m.phi = phi;
    m.theta = theta;
    m.N = 4;
    return m;
}

void expect_close(const BranchMatrix& a, const BranchMatrix& b, double tol) {
    const auto ea = a.entries();
    const auto eb = b.entries();
    for (std::size_t i = 0; i < 4; ++i) EXPECT_LE(std::abs(ea[i] - eb[i]), tol) << "entry " << i;
}

}  // namespace

TEST(BranchEntries, printed_examples) {
    const BranchMatrix at0 = branch_entries(params_at(0.5, kPi / 2, 0.0), Branch::Plus);
    EXPECT_NEAR(at0.m00.real(), 0.5, 1e-15);
    EXPECT_LE(std::abs(at0.m10 - Complex(0.0, 0.5)), 1e-15);
    EXPECT_LE(std::abs(at0.m01 - Complex(0.0, -0.5)), 1e-15);

    const BranchMatrix up = branch_entries(params_at(0.5, kPi / 2, kPi / 2), Branch::Plus);
    EXPECT_EQ(up.m00.real(), 1.0);
    EXPECT_LE(std::abs(up.m10), 1e-15);

    const BranchMatrix down = branch_entries(params_at(0.5, kPi / 2, kPi / 2), Branch::Minus);
    EXPECT_EQ(down.m00.real(), 0.0);
    EXPECT_LE(std::abs(down.m10), 1e-15);
}

TEST(BranchEntries, half_angle_convention) {
    for (int k = 0; k < 64; ++k) {
        const double theta = 2.0 * kPi * k / 64.0;
        const BranchMatrix m = branch_entries(params_at(0.5, kPi / 2, theta), Branch::Plus);
        EXPECT_NEAR(m.m00.real(), 0.5 + 0.5 * std::sin(theta), 1e-12);
    }
}

TEST(BranchEntries, pure_state_for_random_parameters) {
    for (int trial = 0; trial < 500; ++trial) {
        const ModelParams m = params_at(uniform(0, 1), uniform(-kPi, kPi), uniform(-4 * kPi, 4 * kPi));
        for (Branch b : {Branch::Plus, Branch::Minus}) {
            const BranchMatrix bm = branch_entries(m, b);
            const double x = bm.m00.real();
            EXPECT_NEAR(x * (1.0 - x), std::norm(bm.m10), 1e-12);
            EXPECT_NEAR(bm.m11.real(), 1.0 - x, 1e-15);
            EXPECT_LE(std::abs(bm.m01 - std::conj(bm.m10)), 1e-15);
            EXPECT_LE(std::abs(bm.det()), 1e-12);
        }
    }
}

TEST(CrossBranch, same_sign_matches_printed_formulas) {
    for (int trial = 0; trial < 500; ++trial) {
        const ModelParams m = params_at(uniform(0, 1), uniform(-kPi, kPi), uniform(-4 * kPi, 4 * kPi));
        expect_close(cross_branch_matrix(m, Branch::Plus, Branch::Plus), branch_entries(m, Branch::Plus), 1e-12);
        expect_close(cross_branch_matrix(m, Branch::Minus, Branch::Minus), branch_entries(m, Branch::Minus), 1e-12);
    }
}

TEST(CrossBranch, no_rotation_gives_constituent_projector) {
    const double p = 0.3, phi = 0.7;
    const BranchMatrix m = cross_branch_matrix(params_at(p, phi, 0.0), Branch::Plus, Branch::Minus);
    EXPECT_NEAR(m.m00.real(), p, 1e-15);
    EXPECT_LE(std::abs(m.m10 - std::sqrt(p * (1 - p)) * std::polar(1.0, phi)), 1e-15);
}

TEST(CrossBranch, opposite_quarter_turns) {
    // R(pi/2)|Psi> = |0>, R(-pi/2)|Psi> = i|1>, so the product is -i |0><1|.
    const BranchMatrix m = cross_branch_matrix(params_at(0.5, kPi / 2, kPi / 2), Branch::Plus, Branch::Minus);
    EXPECT_LE(std::abs(m.m01 - Complex(0.0, -1.0)), 1e-15);
    EXPECT_LE(std::abs(m.m00), 1e-15);
    EXPECT_LE(std::abs(m.m10), 1e-15);
    EXPECT_LE(std::abs(m.m11), 1e-15);
}

TEST(CrossBranch, adjoint_swaps_branches) {
    for (int trial = 0; trial < 200; ++trial) {
        const ModelParams m = params_at(uniform(0, 1), uniform(-kPi, kPi), uniform(-4 * kPi, 4 * kPi));
        expect_close(cross_branch_matrix(m, Branch::Plus, Branch::Minus).adjoint(),
                     cross_branch_matrix(m, Branch::Minus, Branch::Plus), 1e-12);
        EXPECT_LE(cross_branch_matrix(m, Branch::Plus, Branch::Minus).max_abs(), 1.0 + 1e-12);
    }
}

TEST(ModelParams, validation) {
    ModelParams m;
    EXPECT_NO_THROW(m.validate());
    m.c0 = 0.9;
    EXPECT_THROW(m.validate(), DomainError);
    m = ModelParams{};
    m.p = 1.5;
    EXPECT_THROW(m.validate(), DomainError);
    m = ModelParams{};
    m.N = 0;
    EXPECT_THROW(m.validate(), DomainError);
    m = ModelParams{};
    m.c0 = std::polar(std::sqrt(0.25), 1.0);
    m.c1 = std::polar(std::sqrt(0.75), -2.0);
    EXPECT_NO_THROW(m.validate());
}

TEST(ModelParams, time_conversion) {
    ModelParams m;
    m.N = 50;
    m.omega = 2.0;
    const ModelParams at = m.with_time(25.0 * kPi);
    EXPECT_DOUBLE_EQ(at.theta, kPi);
    EXPECT_DOUBLE_EQ(at.time(), 25.0 * kPi);
}
