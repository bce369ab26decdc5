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

// Prints outcome probabilities, coherences and negativity at a few
// interaction angles for a small apparatus.

#include <cmath>
#include <cstdio>
#include <numbers>

#include "cgmeas/cgmeas.hpp"

int main() {
    using namespace cgmeas;
    ModelParams params;
    params.c0 = 1.0 / std::numbers::sqrt3;
    params.c1 = std::sqrt(2.0 / 3.0);
    params.N = 12;

    std::printf("%8s %10s %10s %10s %12s %12s\n", "theta", "Pr(+1)", "Pr(0)", "Pr(-1)", "|rho_+1,0|", "negativity");
    for (double theta : linspace(0.0, std::numbers::pi, 9)) {
        const ModelParams at = params.with_theta(theta);
        const auto pr = magnetization_probabilities(at);
        const EffectiveState rho = effective_apparatus_state(at);
        const double neg = negativity(joint_effective_state(at), 2, 3);
        std::printf("%8.4f %10.6f %10.6f %10.6f %12.4e %12.4e\n", theta, pr.plus, pr.zero, pr.minus,
                    std::abs(rho(index_of(Bin::Plus), index_of(Bin::Zero))), neg);
    }
    return 0;
}
