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

#ifndef SHADOWPILOT__AUTOPILOT__DRIVER_HPP_
#define SHADOWPILOT__AUTOPILOT__DRIVER_HPP_

#include "shadowpilot/autopilot/maneuver.hpp"
#include "shadowpilot/autopilot/mpc_config.hpp"
#include "shadowpilot/sim/scenario.hpp"

#include <optional>
#include <vector>

namespace shadowpilot::autopilot
{

struct ManeuverStart
{
  sim::Tick tick;
  Maneuver maneuver;

  bool operator==(const ManeuverStart &) const = default;
};

struct AutopilotRun
{
  std::vector<ManeuverStart> lane_changes;  // in tick order
  std::optional<sim::Collision> first_collision;
};

/// Lets the target autopilot drive the whole scenario, recording every lane change it
/// initiates and the first ego collision, if any.
[[nodiscard]] AutopilotRun drive_scenario(const sim::ScenarioSpec & spec, const MpcConfig & cfg);

}  // namespace shadowpilot::autopilot

#endif  // SHADOWPILOT__AUTOPILOT__DRIVER_HPP_
