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

#ifndef SHADOWPILOT__AUTOPILOT__MANEUVER_HPP_
#define SHADOWPILOT__AUTOPILOT__MANEUVER_HPP_

#include "shadowpilot/sim/types.hpp"

#include <array>
#include <optional>
#include <string_view>

namespace shadowpilot::autopilot
{

enum class Maneuver { kKeepLane, kChangeLeft, kChangeRight };

/// Candidate order; also the tie-break priority.
inline constexpr std::array<Maneuver, 3> kManeuverPriority{
  Maneuver::kKeepLane, Maneuver::kChangeLeft, Maneuver::kChangeRight};

[[nodiscard]] constexpr sim::LaneChangeCommand to_command(Maneuver m)
{
  switch (m) {
    case Maneuver::kChangeLeft:
      return sim::LaneChangeCommand::kLeft;
    case Maneuver::kChangeRight:
      return sim::LaneChangeCommand::kRight;
    case Maneuver::kKeepLane:
      break;
  }
  return sim::LaneChangeCommand::kNone;
}

[[nodiscard]] constexpr Maneuver maneuver_for_direction(int direction)
{
  if (direction > 0) {
    return Maneuver::kChangeLeft;
  }
  if (direction < 0) {
    return Maneuver::kChangeRight;
  }
  return Maneuver::kKeepLane;
}

[[nodiscard]] constexpr bool is_lane_change(Maneuver m) { return m != Maneuver::kKeepLane; }

/// Lane the ego ends up in, given its current lane (or the active maneuver's target).
[[nodiscard]] int target_lane(Maneuver m, const sim::VehicleState & ego);

[[nodiscard]] std::string_view to_string(Maneuver m);
[[nodiscard]] std::optional<Maneuver> maneuver_from_string(std::string_view s);

}  // namespace shadowpilot::autopilot

#endif  // SHADOWPILOT__AUTOPILOT__MANEUVER_HPP_
