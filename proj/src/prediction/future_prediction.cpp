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

#include "shadowpilot/prediction/future_prediction.hpp"

#include "shadowpilot/errors.hpp"
#include "shadowpilot/sim/vehicle.hpp"
#include "shadowpilot/sim/world.hpp"

#include <cmath>

namespace shadowpilot::prediction
{

void PredictionConfig::validate() const
{
  if (!(horizon > 0.0) || !(dt > 0.0)) {
    throw ContractViolation("PredictionConfig: horizon and dt must be positive");
  }
  const double ratio = horizon / dt;
  if (std::abs(ratio - std::round(ratio)) > 1e-6) {
    throw ContractViolation("PredictionConfig: horizon / dt must be an integer");
  }
}

int PredictionConfig::steps() const { return static_cast<int>(std::llround(horizon / dt)); }

std::string_view to_string(const EffectKind kind)
{
  switch (kind) {
    case EffectKind::kTakeOverRequest:
      return "TakeOverRequest";
    case EffectKind::kCollisionRisk:
      return "CollisionRisk";
    case EffectKind::kNone:
      break;
  }
  return "None";
}

std::optional<EffectKind> effect_kind_from_string(const std::string_view s)
{
  for (const auto kind :
       {EffectKind::kNone, EffectKind::kTakeOverRequest, EffectKind::kCollisionRisk}) {
    if (s == to_string(kind)) {
      return kind;
    }
  }
  return std::nullopt;
}

std::vector<sim::WorldState> predict_future(
  const sim::WorldState & world, const ProposedAction & action, const PredictionConfig & cfg)
{
  cfg.validate();
  const int steps = cfg.steps();

  std::vector<sim::WorldState> trajectory;
  trajectory.reserve(static_cast<std::size_t>(steps));

  sim::WorldState current = world;
  sim::begin_lane_change(
    current.ego, autopilot::to_command(action.maneuver), current.lanes, cfg.lane_change_duration);

  for (int k = 0; k < steps; ++k) {
    sim::WorldState next = current;
    next.ego = sim::step_vehicle(
      current.ego, action.a_lon, cfg.dt, current.lanes, cfg.lane_change_duration);
    for (auto & actor : next.traffic) {
      actor.state = sim::step_vehicle(
        actor.state, actor.state.a_lon, cfg.dt, current.lanes, cfg.lane_change_duration);
    }
    next.tick = current.tick + 1;
    next.time = static_cast<double>(next.tick) * cfg.dt;
    next.collision = sim::check_collision(next);
    trajectory.push_back(next);
    current = std::move(next);
  }
  return trajectory;
}

std::optional<CollisionEstimate> estimate_collision(
  const std::span<const sim::WorldState> trajectory, const PredictionConfig & cfg)
{
  for (std::size_t k = 0; k < trajectory.size(); ++k) {
    if (const auto hit = sim::check_collision(trajectory[k])) {
      const int steps = static_cast<int>(k) + 1;
      return CollisionEstimate{steps, steps * cfg.dt, hit->actor_id};
    }
  }
  return std::nullopt;
}

PredictedEffect classify_effect(
  const sim::WorldState & world, const ProposedAction & action, const bool planner_infeasible,
  const PredictionConfig & cfg)
{
  if (planner_infeasible) {
    return PredictedEffect::take_over_request();
  }
  const auto trajectory = predict_future(world, action, cfg);
  if (const auto hit = estimate_collision(trajectory, cfg)) {
    return PredictedEffect::collision_risk(hit->ttc, hit->actor_id);
  }
  return PredictedEffect::none();
}

}  // namespace shadowpilot::prediction
