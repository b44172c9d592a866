// Copyright 2026 The shadowpilot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "shadowpilot/autopilot/idm.hpp"

#include "shadowpilot/errors.hpp"

#include <algorithm>
#include <cmath>

namespace shadowpilot::autopilot
{

double idm_desired_gap(const double v, const double v_lead, const IdmParams & params)
{
  const double braking_term =
    v * (v - v_lead) / (2.0 * std::sqrt(params.a_max * params.b_comf));
  return params.s0 + std::max(0.0, v * params.time_headway + braking_term);
}

double idm_accel(
  const double v, const double gap, const double v_lead, const double v_des,
  const IdmParams & params)
{
  if (!(gap > 0.0)) {
    throw ContractViolation("idm_accel: gap must be positive");
  }
  if (!(v_des > 0.0)) {
    throw ContractViolation("idm_accel: desired speed must be positive");
  }

  const double free_road = std::pow(v / v_des, params.delta);
  double interaction = 0.0;
  if (std::isfinite(gap)) {
    const double ratio = idm_desired_gap(v, v_lead, params) / gap;
    interaction = ratio * ratio;
  }
  const double a = params.a_max * (1.0 - free_road - interaction);
  return std::clamp(a, -params.b_max, params.a_max);
}

}  // namespace shadowpilot::autopilot
