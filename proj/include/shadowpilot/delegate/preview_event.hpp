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

#ifndef SHADOWPILOT__DELEGATE__PREVIEW_EVENT_HPP_
#define SHADOWPILOT__DELEGATE__PREVIEW_EVENT_HPP_

#include "shadowpilot/autopilot/maneuver.hpp"
#include "shadowpilot/prediction/future_prediction.hpp"
#include "shadowpilot/sim/types.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace shadowpilot::delegate
{

/// Why an event was emitted.
enum class PreviewTrigger { kSessionStart, kManeuverChange, kSeverityEscalation };

[[nodiscard]] std::string_view to_string(PreviewTrigger trigger);
[[nodiscard]] std::optional<PreviewTrigger> preview_trigger_from_string(std::string_view s);

/// Advisory output of the delegate. Carries no control channel.
struct PreviewEvent
{
  sim::Tick tick{0};
  double time{0.0};  // [s] tick * dt
  autopilot::Maneuver proposed_maneuver{autopilot::Maneuver::kKeepLane};
  int target_lane{0};
  double proposed_a_lon{0.0};
  prediction::PredictedEffect effect;
  std::string explanation_id;
  PreviewTrigger trigger{PreviewTrigger::kSessionStart};

  bool operator==(const PreviewEvent &) const = default;
};

}  // namespace shadowpilot::delegate

#endif  // SHADOWPILOT__DELEGATE__PREVIEW_EVENT_HPP_
