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

#ifndef SHADOWPILOT__SIM__VEHICLE_HPP_
#define SHADOWPILOT__SIM__VEHICLE_HPP_

#include "shadowpilot/sim/types.hpp"

namespace shadowpilot::sim
{

/// Constant-acceleration update over one step. Speed is floored at zero and the
/// displacement is clipped at the stopping point. An active lane change advances along
/// the lateral profile; when it reaches lane_change_duration the lane index switches to
/// the target and the offset resets to zero.
/// Throws ContractViolation when dt <= 0.
[[nodiscard]] VehicleState step_vehicle(
  const VehicleState & state, double a_lon, double dt, const LaneConfig & lanes,
  double lane_change_duration = kLaneChangeDuration);

/// True when `cmd` would start a lane change: no maneuver active and the target exists.
[[nodiscard]] bool can_begin_lane_change(
  const VehicleState & state, LaneChangeCommand cmd, const LaneConfig & lanes);

/// Starts a lane change if allowed; returns whether it started.
bool begin_lane_change(
  VehicleState & state, LaneChangeCommand cmd, const LaneConfig & lanes,
  double lane_change_duration = kLaneChangeDuration);

/// Lateral coordinate of the footprint center.
[[nodiscard]] double lateral_position(const VehicleState & state, const LaneConfig & lanes);

[[nodiscard]] bool lateral_overlap(
  const VehicleState & a, const VehicleState & b, const LaneConfig & lanes);

/// Axis-aligned rectangle overlap. Touching edges count as overlap.
[[nodiscard]] bool footprints_overlap(
  const VehicleState & a, const VehicleState & b, const LaneConfig & lanes);

/// Bumper-to-bumper longitudinal gap; negative when the footprints overlap in s.
[[nodiscard]] double longitudinal_gap(const VehicleState & a, const VehicleState & b);

}  // namespace shadowpilot::sim

#endif  // SHADOWPILOT__SIM__VEHICLE_HPP_
