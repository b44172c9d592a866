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

#ifndef SHADOWPILOT__PREDICTION__FUTURE_PREDICTION_HPP_
#define SHADOWPILOT__PREDICTION__FUTURE_PREDICTION_HPP_

#include "shadowpilot/autopilot/maneuver.hpp"
#include "shadowpilot/sim/types.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace shadowpilot::prediction
{

struct PredictionConfig
{
  double horizon{5.0};          // [s]
  double dt{sim::kDefaultDt};   // [s] same grid as the simulation
  double lane_change_duration{sim::kLaneChangeDuration};

  /// Throws ContractViolation unless horizon > 0 and horizon / dt is an integer.
  void validate() const;
  [[nodiscard]] int steps() const;

  bool operator==(const PredictionConfig &) const = default;
};

/// Ordered by severity: None < TakeOverRequest < CollisionRisk.
enum class EffectKind { kNone, kTakeOverRequest, kCollisionRisk };

[[nodiscard]] constexpr int severity_rank(EffectKind kind) { return static_cast<int>(kind); }
[[nodiscard]] std::string_view to_string(EffectKind kind);
[[nodiscard]] std::optional<EffectKind> effect_kind_from_string(std::string_view s);

struct PredictedEffect
{
  EffectKind kind{EffectKind::kNone};
  std::optional<double> ttc;  // [s] present iff kind == kCollisionRisk
  std::optional<sim::VehicleId> actor_id;

  static PredictedEffect none() { return {}; }
  static PredictedEffect take_over_request() { return {EffectKind::kTakeOverRequest, {}, {}}; }
  static PredictedEffect collision_risk(double ttc, sim::VehicleId actor)
  {
    return {EffectKind::kCollisionRisk, ttc, actor};
  }

  bool operator==(const PredictedEffect &) const = default;
};

struct ProposedAction
{
  autopilot::Maneuver maneuver{autopilot::Maneuver::kKeepLane};
  double a_lon{0.0};
};

/// Open-loop kinematic rollout. The ego holds a_lon and follows the maneuver's lateral
/// profile (an active lane change simply continues); every traffic actor keeps its
/// current accelerations with speed floored at zero. No replanning. Returns the world
/// after each of the cfg.steps() steps.
[[nodiscard]] std::vector<sim::WorldState> predict_future(
  const sim::WorldState & world, const ProposedAction & action, const PredictionConfig & cfg);

struct CollisionEstimate
{
  int steps;      // grid steps from the trajectory start
  double ttc;     // [s] steps * dt
  sim::VehicleId actor_id;
};

/// First step whose ego footprint overlaps an actor footprint.
[[nodiscard]] std::optional<CollisionEstimate> estimate_collision(
  std::span<const sim::WorldState> trajectory, const PredictionConfig & cfg);

/// TakeOverRequest when the planner was infeasible, otherwise CollisionRisk if the
/// rollout collides, otherwise None.
[[nodiscard]] PredictedEffect classify_effect(
  const sim::WorldState & world, const ProposedAction & action, bool planner_infeasible,
  const PredictionConfig & cfg);

}  // namespace shadowpilot::prediction

#endif  // SHADOWPILOT__PREDICTION__FUTURE_PREDICTION_HPP_
