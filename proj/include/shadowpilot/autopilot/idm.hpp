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

#ifndef SHADOWPILOT__AUTOPILOT__IDM_HPP_
#define SHADOWPILOT__AUTOPILOT__IDM_HPP_

namespace shadowpilot::autopilot
{

/// Intelligent Driver Model parameters.
struct IdmParams
{
  double a_max{2.0};         // [m/s^2] maximum acceleration
  double b_comf{3.0};        // [m/s^2] comfortable deceleration
  double s0{2.0};            // [m] jam distance
  double time_headway{1.5};  // [s]
  double delta{4.0};         // acceleration exponent
  double b_max{8.0};         // [m/s^2] hard braking bound for the clamp

  bool operator==(const IdmParams &) const = default;
};

/// IDM acceleration clamped to [-b_max, a_max].
///
/// a = a_max * (1 - (v / v_des)^delta - (s* / gap)^2)
/// s* = s0 + max(0, v * T + v * (v - v_lead) / (2 * sqrt(a_max * b_comf)))
///
/// Pass gap = +infinity for a free road (v_lead is then ignored).
/// Throws ContractViolation when gap <= 0 or v_des <= 0.
[[nodiscard]] double idm_accel(
  double v, double gap, double v_lead, double v_des, const IdmParams & params);

/// Desired dynamic gap s*.
[[nodiscard]] double idm_desired_gap(double v, double v_lead, const IdmParams & params);

}  // namespace shadowpilot::autopilot

#endif  // SHADOWPILOT__AUTOPILOT__IDM_HPP_
