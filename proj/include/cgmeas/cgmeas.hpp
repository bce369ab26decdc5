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

#ifndef CGMEAS_CGMEAS_HPP
#define CGMEAS_CGMEAS_HPP

#include "cgmeas/analysis.hpp"
#include "cgmeas/binning.hpp"
#include "cgmeas/channel_closed.hpp"
#include "cgmeas/channel_exact.hpp"
#include "cgmeas/errors.hpp"
#include "cgmeas/linalg.hpp"
#include "cgmeas/model.hpp"
#include "cgmeas/scaled_sum.hpp"
#include "cgmeas/states.hpp"

#endif  // CGMEAS_CGMEAS_HPP
