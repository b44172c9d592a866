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

#ifndef SHADOWPILOT__AUTOPILOT__MPC_HPP_
#define SHADOWPILOT__AUTOPILOT__MPC_HPP_

#include "shadowpilot/autopilot/maneuver.hpp"
#include "shadowpilot/autopilot/mpc_config.hpp"
#include "shadowpilot/sim/types.hpp"

#include <limits>
#include <vector>

namespace shadowpilot::autopilot
{

inline constexpr double kInfiniteCost = std::numeric_limits<double>::infinity();

struct CandidatePlan
{
  Maneuver maneuver{Maneuver::kKeepLane};
  std::vector<sim::VehicleState> trajectory;  // ego after each rollout tick
  double cost{kInfiniteCost};
  double first_accel{0.0};  // [m/s^2] acceleration applied on the first tick

  [[nodiscard]] bool feasible() const { return cost < kInfiniteCost; }
};

struct PlanResult
{
  Maneuver maneuver{Maneuver::kKeepLane};
  double a_lon{0.0};
  bool infeasible{false};

  bool operator==(const PlanResult &) const = default;
};

/// Rolls the world forward for cfg.horizon under `maneuver` with IDM longitudinal
/// control against the nearest laterally overlapping lead. Traffic follows its scripts.
///
/// cost = sum_ticks dt * w_v * (v - v_des)^2 + w_lc * [maneuver != KeepLane], or
/// infinity on any tick with a collision or a front/rear bumper gap below min_gap in
/// the target lane. A missing target lane also prices the plan at infinity.
[[nodiscard]] CandidatePlan rollout_plan(
  const sim::WorldState & world, Maneuver maneuver, const MpcConfig & cfg,
  const sim::SimParams & sim);

/// Receding-horizon decision for the current tick.
///
/// An active ego lane change is kept (commitment) with IDM longitudinal control.
/// Otherwise the cheapest candidate wins, ties broken KeepLane > ChangeLeft >
/// ChangeRight. If nothing is feasible the result is (KeepLane, -b_max) with
/// infeasible set.
[[nodiscard]] PlanResult plan(
  const sim::WorldState & world, const MpcConfig & cfg, const sim::SimParams & sim);

/// Control that executes `decision`. The lane change command is only issued when no
/// maneuver is active, so commitment ticks do not re-command.
[[nodiscard]] sim::ControlInput to_control(
  const PlanResult & decision, const sim::VehicleState & ego);

/// IDM acceleration of the ego against its current lead.
[[nodiscard]] double follow_accel(
  const sim::WorldState & world, const MpcConfig & cfg);

/// True when some target-lane vehicle is within min_gap of the ego (front or rear).
[[nodiscard]] bool violates_min_gap(
  const sim::WorldState & world, int target_lane, double min_gap);

}  // namespace shadowpilot::autopilot

#endif  // SHADOWPILOT__AUTOPILOT__MPC_HPP_
