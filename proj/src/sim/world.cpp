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

#include "shadowpilot/sim/world.hpp"

#include "shadowpilot/autopilot/idm.hpp"
#include "shadowpilot/errors.hpp"
#include "shadowpilot/sim/vehicle.hpp"

#include <cmath>
#include <limits>
#include <set>
#include <string>

namespace shadowpilot::sim
{
namespace
{

void consider_lead(
  const VehicleState & follower, const VehicleState & other, const LaneConfig & lanes,
  std::optional<Lead> & best)
{
  if (other.id == follower.id || other.s <= follower.s) {
    return;
  }
  if (!lateral_overlap(follower, other, lanes)) {
    return;
  }
  const double gap = other.s - follower.s - 0.5 * (follower.length + other.length);
  if (!best || gap < best->gap || (gap == best->gap && other.id < best->id)) {
    best = Lead{other.id, gap, other.v};
  }
}

const VehicleState * find_vehicle(const WorldState & world, const VehicleId id)
{
  if (world.ego.id == id) {
    return &world.ego;
  }
  for (const auto & t : world.traffic) {
    if (t.state.id == id) {
      return &t.state;
    }
  }
  return nullptr;
}

double traffic_accel(
  const WorldState & world, const TrafficVehicle & vehicle, const SimParams & params)
{
  if (vehicle.behavior == TrafficBehavior::kConstantAccel) {
    return vehicle.state.a_lon;
  }
  const auto lead = nearest_lead(world, vehicle.state.id);
  if (lead && lead->gap <= 0.0) {
    return -params.traffic_idm.b_max;
  }
  const double gap = lead ? lead->gap : std::numeric_limits<double>::infinity();
  const double v_lead = lead ? lead->v : 0.0;
  const double v_des = vehicle.desired_speed > 0.0 ? vehicle.desired_speed : 1e-3;
  return autopilot::idm_accel(vehicle.state.v, gap, v_lead, v_des, params.traffic_idm);
}

}  // namespace

std::optional<Lead> nearest_lead(const WorldState & world, const VehicleId follower)
{
  const VehicleState * self = find_vehicle(world, follower);
  if (self == nullptr) {
    throw ContractViolation("nearest_lead: unknown vehicle id " + std::to_string(follower));
  }
  std::optional<Lead> best;
  consider_lead(*self, world.ego, world.lanes, best);
  for (const auto & t : world.traffic) {
    consider_lead(*self, t.state, world.lanes, best);
  }
  return best;
}

std::optional<Collision> check_collision(const WorldState & world)
{
  for (const auto & t : world.traffic) {
    if (footprints_overlap(world.ego, t.state, world.lanes)) {
      return Collision{t.state.id, world.time};
    }
  }
  return std::nullopt;
}

WorldState step_world(
  const WorldState & world, const ControlInput & ego_control, const SimParams & params)
{
  const ControlInput control = params.limits.clamp(ego_control);

  WorldState next = world;
  VehicleState ego = world.ego;
  if (control.lane_change_cmd != LaneChangeCommand::kNone) {
    begin_lane_change(ego, control.lane_change_cmd, world.lanes, params.lane_change_duration);
  }
  next.ego = step_vehicle(
    ego, control.a_lon_cmd, params.dt, world.lanes, params.lane_change_duration);

  for (std::size_t i = 0; i < world.traffic.size(); ++i) {
    const double a = traffic_accel(world, world.traffic[i], params);
    next.traffic[i].state = step_vehicle(
      world.traffic[i].state, a, params.dt, world.lanes, params.lane_change_duration);
  }

  next.tick = world.tick + 1;
  next.time = static_cast<double>(next.tick) * params.dt;
  next.collision = check_collision(next);
  return next;
}

void validate_world(const WorldState & world)
{
  const auto & lanes = world.lanes;
  if (lanes.lane_count < 1) {
    throw ContractViolation("lane_count must be at least 1");
  }
  if (!(lanes.lane_width > 0.0)) {
    throw ContractViolation("lane_width must be positive");
  }
  if (!(lanes.road_length > 0.0)) {
    throw ContractViolation("road_length must be positive");
  }

  std::set<VehicleId> ids;
  VehicleId previous_traffic_id = std::numeric_limits<VehicleId>::min();
  auto check_vehicle = [&](const VehicleState & v, const std::string & what) {
    if (!ids.insert(v.id).second) {
      throw ContractViolation(what + ": duplicate vehicle id " + std::to_string(v.id));
    }
    if (!lanes.has_lane(v.lane)) {
      throw ContractViolation(what + ": lane " + std::to_string(v.lane) + " does not exist");
    }
    if (!(v.v >= 0.0) || !std::isfinite(v.v)) {
      throw ContractViolation(what + ": speed must be finite and nonnegative");
    }
    if (!(v.s >= 0.0 && v.s <= lanes.road_length)) {
      throw ContractViolation(what + ": s outside [0, road_length]");
    }
    if (!(v.length > 0.0 && v.width > 0.0)) {
      throw ContractViolation(what + ": footprint must have positive size");
    }
    if (std::abs(v.lat_offset) > lanes.lane_width) {
      throw ContractViolation(what + ": |lat_offset| exceeds lane_width");
    }
    if (v.maneuver_target_lane.has_value() != v.maneuver_progress.has_value()) {
      throw ContractViolation(
        what + ": maneuver_progress and maneuver_target_lane must be set together");
    }
    if (v.maneuver_target_lane) {
      if (!lanes.has_lane(*v.maneuver_target_lane) ||
          std::abs(*v.maneuver_target_lane - v.lane) != 1) {
        throw ContractViolation(what + ": maneuver target must be an adjacent existing lane");
      }
      if (*v.maneuver_progress < 0.0) {
        throw ContractViolation(what + ": maneuver_progress must be nonnegative");
      }
    }
  };

  check_vehicle(world.ego, "ego");
  for (const auto & t : world.traffic) {
    check_vehicle(t.state, "traffic vehicle " + std::to_string(t.state.id));
    if (t.state.id <= previous_traffic_id) {
      throw ContractViolation("traffic must be sorted by id");
    }
    previous_traffic_id = t.state.id;
  }
}

}  // namespace shadowpilot::sim
