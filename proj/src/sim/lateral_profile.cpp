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

#include "shadowpilot/sim/lateral_profile.hpp"

#include "shadowpilot/errors.hpp"
#include "shadowpilot/sim/types.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace shadowpilot::sim
{

LateralSample lateral_profile(
  const double progress, const double lane_change_duration, const double lane_width,
  const int direction)
{
  if (!(lane_change_duration > 0.0)) {
    throw ContractViolation("lateral_profile: lane change duration must be positive");
  }
  if (!(progress >= 0.0 && progress <= lane_change_duration + kGeometryEpsilon)) {
    throw ContractViolation(
      "lateral_profile: progress " + std::to_string(progress) + " outside [0, " +
      std::to_string(lane_change_duration) + "]");
  }
  if (direction != 1 && direction != -1) {
    throw ContractViolation("lateral_profile: direction must be +1 or -1");
  }

  const double half_width = 0.5 * lane_width;
  const double omega = std::numbers::pi / lane_change_duration;
  const double phase = std::cos(omega * progress);
  return {
    direction * half_width * (1.0 - phase),
    direction * half_width * omega * omega * phase,
  };
}

double lateral_profile_max_slope(const double lane_change_duration, const double lane_width)
{
  return 0.5 * lane_width * std::numbers::pi / lane_change_duration;
}

}  // namespace shadowpilot::sim
