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

#ifndef CGMEAS_STATES_HPP
#define CGMEAS_STATES_HPP

#include <complex>

#include <Eigen/Dense>

namespace cgmeas {

/// 3x3 apparatus state in the effective basis (+1, 0, -1).
using EffectiveState = Eigen::Matrix3cd;
/// 6x6 state on system (0, 1) x effective apparatus (+1, 0, -1), system index major.
using JointEffectiveState = Eigen::Matrix<std::complex<double>, 6, 6>;

}  // namespace cgmeas

#endif  // CGMEAS_STATES_HPP
