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

#include "shadowpilot/autopilot/mpc.hpp"

#include "shadowpilot/autopilot/idm.hpp"
#include "shadowpilot/errors.hpp"
#include "shadowpilot/sim/vehicle.hpp"
#include "shadowpilot/sim/world.hpp"

#include <cmath>
#include <limits>

namespace shadowpilot::autopilot
{

void MpcConfig::validate(const double dt) const
{
  const double ticks = horizon / dt;
  if (!(ticks >= 1.0) || std::abs(ticks - std::round(ticks)) > 1e-6) {
    throw ContractViolation("MpcConfig: horizon / dt must be a positive integer");
  }
  if (!(w_v >= 0.0 && w_lc >= 0.0)) {
    throw ContractViolation("MpcConfig: weights must be nonnegative");
  }
  if (!(min_gap > 0.0)) {
    throw ContractViolation("MpcConfig: min_gap must be positive");
  }
  if (!(v_des > 0.0)) {
    throw ContractViolation("MpcConfig: v_des must be positive");
  }
  if (!(idm.a_max > 0.0 && idm.b_comf > 0.0 && idm.b_max > 0.0 && idm.delta > 0.0)) {
    throw ContractViolation("MpcConfig: IDM accelerations and exponent must be positive");
  }
}

double follow_accel(const sim::WorldState & world, const MpcConfig & cfg)
{
  const auto lead = sim::nearest_lead(world, world.ego.id);
  if (!lead) {
    return idm_accel(
      world.ego.v, std::numeric_limits<double>::infinity(), 0.0, cfg.v_des, cfg.idm);
  }
  if (lead->gap <= 0.0) {
    return -cfg.idm.b_max;
  }
  return idm_accel(world.ego.v, lead->gap, lead->v, cfg.v_des, cfg.idm);
}

bool violates_min_gap(const sim::WorldState & world, const int target_lane, const double min_gap)
{
  for (const auto & t : world.traffic) {
    if (t.state.lane != target_lane) {
      continue;
    }
    if (sim::longitudinal_gap(world.ego, t.state) < min_gap) {
      return true;
    }
  }
  return false;
}

CandidatePlan rollout_plan(
  const sim::WorldState & world, const Maneuver maneuver, const MpcConfig & cfg,
  const sim::SimParams & sim)
{
  CandidatePlan candidate;
  candidate.maneuver = maneuver;

  const auto command = to_command(maneuver);
  const int lane_after = target_lane(maneuver, world.ego);
  if (!world.lanes.has_lane(lane_after)) {
    return candidate;
  }

  const auto ticks = static_cast<int>(std::llround(cfg.horizon / sim.dt));
  candidate.trajectory.reserve(static_cast<std::size_t>(ticks));

  double cost = 0.0;
  sim::WorldState rollout = world;
  for (int k = 0; k < ticks; ++k) {
    const double a = follow_accel(rollout, cfg);
    if (k == 0) {
      candidate.first_accel = a;
    }
    const sim::ControlInput control{a, k == 0 ? command : sim::LaneChangeCommand::kNone};
    rollout = sim::step_world(rollout, control, sim);
    candidate.trajectory.push_back(rollout.ego);

    if (rollout.collision || violates_min_gap(rollout, lane_after, cfg.min_gap)) {
      candidate.cost = kInfiniteCost;
      return candidate;
    }
    const double speed_error = rollout.ego.v - cfg.v_des;
    cost += sim.dt * cfg.w_v * speed_error * speed_error;
  }
  if (is_lane_change(maneuver)) {
    cost += cfg.w_lc;
  }
  candidate.cost = cost;
  return candidate;
}

PlanResult plan(const sim::WorldState & world, const MpcConfig & cfg, const sim::SimParams & sim)
{
  if (world.ego.in_maneuver()) {
    return {maneuver_for_direction(world.ego.maneuver_direction()), follow_accel(world, cfg), false};
  }

  std::optional<CandidatePlan> best;
  for (const auto m : kManeuverPriority) {
    auto candidate = rollout_plan(world, m, cfg, sim);
    if (!candidate.feasible()) {
      continue;
    }
    if (!best || candidate.cost < best->cost) {
      best = std::move(candidate);
    }
  }
  if (!best) {
    return {Maneuver::kKeepLane, -cfg.idm.b_max, true};
  }
  return {best->maneuver, best->first_accel, false};
}

sim::ControlInput to_control(const PlanResult & decision, const sim::VehicleState & ego)
{
  return {
    decision.a_lon,
    ego.in_maneuver() ? sim::LaneChangeCommand::kNone : to_command(decision.maneuver),
  };
}

}  // namespace shadowpilot::autopilot
