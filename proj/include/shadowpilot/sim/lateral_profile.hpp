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

#ifndef SHADOWPILOT__SIM__LATERAL_PROFILE_HPP_
#define SHADOWPILOT__SIM__LATERAL_PROFILE_HPP_

namespace shadowpilot::sim
{

struct LateralSample
{
  double offset;  // [m] from the origin lane center
  double a_lat;   // [m/s^2]
};

/// Cosine lane-change profile. The offset rises from 0 to direction * lane_width over
/// lane_change_duration seconds; the acceleration is its closed-form second derivative.
/// Throws ContractViolation when progress is outside [0, lane_change_duration].
[[nodiscard]] LateralSample lateral_profile(
  double progress, double lane_change_duration, double lane_width, int direction);

/// Largest |d offset / d progress| of the profile.
[[nodiscard]] double lateral_profile_max_slope(double lane_change_duration, double lane_width);

}  // namespace shadowpilot::sim

#endif  // SHADOWPILOT__SIM__LATERAL_PROFILE_HPP_
