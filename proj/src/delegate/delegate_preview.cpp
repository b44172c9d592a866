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

#include "shadowpilot/delegate/delegate_preview.hpp"

#include "shadowpilot/explanation/explanation.hpp"

#include <utility>

namespace shadowpilot::delegate
{

std::string_view to_string(const PreviewTrigger trigger)
{
  switch (trigger) {
    case PreviewTrigger::kManeuverChange:
      return "maneuver_change";
    case PreviewTrigger::kSeverityEscalation:
      return "severity_escalation";
    case PreviewTrigger::kSessionStart:
      break;
  }
  return "session_start";
}

std::optional<PreviewTrigger> preview_trigger_from_string(const std::string_view s)
{
  for (const auto t :
       {PreviewTrigger::kSessionStart, PreviewTrigger::kManeuverChange,
        PreviewTrigger::kSeverityEscalation}) {
    if (s == to_string(t)) {
      return t;
    }
  }
  return std::nullopt;
}

DelegatePreview::DelegatePreview(PolicyFn policy, PredictorFn predictor)
: policy_(std::move(policy)), predictor_(std::move(predictor))
{
}

std::optional<PreviewEvent> DelegatePreview::shadow_step(const sim::WorldState & world)
{
  const auto decision = policy_(world);
  const auto effect = predictor_(world, decision);

  PreviewEvent event;
  event.tick = world.tick;
  event.time = world.time;
  event.proposed_maneuver = decision.maneuver;
  event.target_lane = autopilot::target_lane(decision.maneuver, world.ego);
  event.proposed_a_lon = decision.a_lon;
  event.effect = effect;
  event.explanation_id = std::string(explanation::template_id_for(effect.kind));

  if (!last_) {
    event.trigger = PreviewTrigger::kSessionStart;
  } else if (
    decision.maneuver != last_->proposed_maneuver ||
    (autopilot::is_lane_change(decision.maneuver) && event.target_lane != last_->target_lane)) {
    event.trigger = PreviewTrigger::kManeuverChange;
  } else if (
    prediction::severity_rank(effect.kind) > prediction::severity_rank(last_->effect.kind)) {
    event.trigger = PreviewTrigger::kSeverityEscalation;
  } else {
    return std::nullopt;
  }

  last_ = event;
  return event;
}

DelegatePreview make_target_delegate(
  const autopilot::MpcConfig & cfg, const sim::SimParams & sim,
  const prediction::PredictionConfig & prediction_cfg)
{
  return DelegatePreview(
    [cfg, sim](const sim::WorldState & world) { return autopilot::plan(world, cfg, sim); },
    [prediction_cfg](const sim::WorldState & world, const autopilot::PlanResult & decision) {
      return prediction::classify_effect(
        world, {decision.maneuver, decision.a_lon}, decision.infeasible, prediction_cfg);
    });
}

}  // namespace shadowpilot::delegate
