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

#include "shadowpilot/autopilot/maneuver.hpp"

namespace shadowpilot::autopilot
{

int target_lane(const Maneuver m, const sim::VehicleState & ego)
{
  if (ego.maneuver_target_lane) {
    return *ego.maneuver_target_lane;
  }
  return ego.lane + sim::direction_of(to_command(m));
}

std::string_view to_string(const Maneuver m)
{
  switch (m) {
    case Maneuver::kChangeLeft:
      return "ChangeLeft";
    case Maneuver::kChangeRight:
      return "ChangeRight";
    case Maneuver::kKeepLane:
      break;
  }
  return "KeepLane";
}

std::optional<Maneuver> maneuver_from_string(const std::string_view s)
{
  for (const auto m : kManeuverPriority) {
    if (s == to_string(m)) {
      return m;
    }
  }
  return std::nullopt;
}

}  // namespace shadowpilot::autopilot
