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

#include "shadowpilot/sim/vehicle.hpp"

#include "shadowpilot/errors.hpp"
#include "shadowpilot/sim/lateral_profile.hpp"

#include <algorithm>
#include <cmath>

namespace shadowpilot::sim
{

std::string_view to_string(const LaneChangeCommand cmd)
{
  switch (cmd) {
    case LaneChangeCommand::kLeft:
      return "left";
    case LaneChangeCommand::kRight:
      return "right";
    case LaneChangeCommand::kNone:
      break;
  }
  return "none";
}

std::optional<LaneChangeCommand> lane_change_command_from_string(const std::string_view s)
{
  if (s == "none") {
    return LaneChangeCommand::kNone;
  }
  if (s == "left") {
    return LaneChangeCommand::kLeft;
  }
  if (s == "right") {
    return LaneChangeCommand::kRight;
  }
  return std::nullopt;
}

std::string_view to_string(const TrafficBehavior behavior)
{
  return behavior == TrafficBehavior::kFollowIdm ? "follow-IDM" : "constant-accel";
}

std::optional<TrafficBehavior> traffic_behavior_from_string(const std::string_view s)
{
  if (s == "constant-accel") {
    return TrafficBehavior::kConstantAccel;
  }
  if (s == "follow-IDM" || s == "follow-idm") {
    return TrafficBehavior::kFollowIdm;
  }
  return std::nullopt;
}

ControlInput ControlLimits::clamp(ControlInput input) const
{
  if (std::isnan(input.a_lon_cmd)) {
    input.a_lon_cmd = 0.0;
  }
  input.a_lon_cmd = std::clamp(input.a_lon_cmd, -b_max, a_max);
  return input;
}

VehicleState step_vehicle(
  const VehicleState & state, const double a_lon, const double dt, const LaneConfig & lanes,
  const double lane_change_duration)
{
  if (!(dt > 0.0)) {
    throw ContractViolation("step_vehicle: dt must be positive");
  }

  VehicleState next = state;
  next.a_lon = a_lon;

  const double v_end = state.v + a_lon * dt;
  double ds = 0.0;
  if (v_end < 0.0) {
    // Stops inside the step: travel only up to the stopping point.
    ds = a_lon < 0.0 ? state.v * state.v / (2.0 * -a_lon) : 0.0;
    next.v = 0.0;
  } else {
    ds = state.v * dt + 0.5 * a_lon * dt * dt;
    next.v = v_end;
  }
  next.s = std::min(state.s + ds, lanes.road_length);

  if (state.in_maneuver()) {
    const int direction = state.maneuver_direction();
    const double progress = state.maneuver_progress.value_or(0.0) + dt;
    if (progress >= lane_change_duration - kGeometryEpsilon) {
      next.lane = *state.maneuver_target_lane;
      next.lat_offset = 0.0;
      next.a_lat = 0.0;
      next.maneuver_progress.reset();
      next.maneuver_target_lane.reset();
    } else {
      const auto sample =
        lateral_profile(progress, lane_change_duration, lanes.lane_width, direction);
      next.lat_offset = sample.offset;
      next.a_lat = sample.a_lat;
      next.maneuver_progress = progress;
    }
  }
  return next;
}

bool can_begin_lane_change(
  const VehicleState & state, const LaneChangeCommand cmd, const LaneConfig & lanes)
{
  const int direction = direction_of(cmd);
  return direction != 0 && !state.in_maneuver() && lanes.has_lane(state.lane + direction);
}

bool begin_lane_change(
  VehicleState & state, const LaneChangeCommand cmd, const LaneConfig & lanes,
  const double lane_change_duration)
{
  if (!can_begin_lane_change(state, cmd, lanes)) {
    return false;
  }
  const int direction = direction_of(cmd);
  state.maneuver_target_lane = state.lane + direction;
  state.maneuver_progress = 0.0;
  state.a_lat = lateral_profile(0.0, lane_change_duration, lanes.lane_width, direction).a_lat;
  return true;
}

double lateral_position(const VehicleState & state, const LaneConfig & lanes)
{
  return lanes.center(state.lane) + state.lat_offset;
}

bool lateral_overlap(const VehicleState & a, const VehicleState & b, const LaneConfig & lanes)
{
  const double dy = std::abs(lateral_position(a, lanes) - lateral_position(b, lanes));
  return dy <= 0.5 * (a.width + b.width) + kGeometryEpsilon;
}

bool footprints_overlap(const VehicleState & a, const VehicleState & b, const LaneConfig & lanes)
{
  return lateral_overlap(a, b, lanes) && longitudinal_gap(a, b) <= kGeometryEpsilon;
}

double longitudinal_gap(const VehicleState & a, const VehicleState & b)
{
  return std::abs(a.s - b.s) - 0.5 * (a.length + b.length);
}

}  // namespace shadowpilot::sim
