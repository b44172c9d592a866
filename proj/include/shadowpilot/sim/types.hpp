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

#ifndef SHADOWPILOT__SIM__TYPES_HPP_
#define SHADOWPILOT__SIM__TYPES_HPP_

#include "shadowpilot/autopilot/idm.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace shadowpilot::sim
{

inline constexpr double kDefaultDt = 0.1;             // [s]
inline constexpr double kLaneChangeDuration = 3.0;    // [s]
inline constexpr double kDefaultLaneWidth = 3.5;      // [m]
inline constexpr double kDefaultVehicleLength = 4.5;  // [m]
inline constexpr double kDefaultVehicleWidth = 1.8;   // [m]

// Slack for geometric comparisons that are exact in real arithmetic.
inline constexpr double kGeometryEpsilon = 1e-9;

using VehicleId = std::int64_t;
using Tick = std::int64_t;

/// Straight highway. Lane 0 is the rightmost lane; indices grow to the left.
struct LaneConfig
{
  int lane_count{3};
  double lane_width{kDefaultLaneWidth};  // [m]
  double road_length{5000.0};            // [m]

  [[nodiscard]] bool has_lane(int lane) const { return lane >= 0 && lane < lane_count; }
  /// Lateral coordinate of a lane center, measured leftwards from the right road edge.
  [[nodiscard]] double center(int lane) const { return (lane + 0.5) * lane_width; }

  bool operator==(const LaneConfig &) const = default;
};

enum class LaneChangeCommand { kNone, kLeft, kRight };

/// +1 for left, -1 for right, 0 for none.
[[nodiscard]] constexpr int direction_of(LaneChangeCommand cmd)
{
  switch (cmd) {
    case LaneChangeCommand::kLeft:
      return 1;
    case LaneChangeCommand::kRight:
      return -1;
    case LaneChangeCommand::kNone:
      break;
  }
  return 0;
}

[[nodiscard]] std::string_view to_string(LaneChangeCommand cmd);
[[nodiscard]] std::optional<LaneChangeCommand> lane_change_command_from_string(std::string_view s);

struct VehicleState
{
  VehicleId id{0};
  double s{0.0};           // [m] longitudinal position of the footprint center
  int lane{0};
  double lat_offset{0.0};  // [m] from the current lane center, nonzero only mid lane change
  double v{0.0};           // [m/s]
  double a_lon{0.0};       // [m/s^2]
  double a_lat{0.0};       // [m/s^2]
  std::optional<double> maneuver_progress;  // [s] elapsed in the active lane change
  std::optional<int> maneuver_target_lane;
  double length{kDefaultVehicleLength};
  double width{kDefaultVehicleWidth};

  [[nodiscard]] bool in_maneuver() const { return maneuver_target_lane.has_value(); }
  /// +1 / -1 while a lane change is active, 0 otherwise.
  [[nodiscard]] int maneuver_direction() const
  {
    if (!maneuver_target_lane) {
      return 0;
    }
    return *maneuver_target_lane > lane ? 1 : -1;
  }

  bool operator==(const VehicleState &) const = default;
};

struct ControlInput
{
  double a_lon_cmd{0.0};  // [m/s^2]
  LaneChangeCommand lane_change_cmd{LaneChangeCommand::kNone};

  bool operator==(const ControlInput &) const = default;
};

/// Longitudinal command bounds [-b_max, a_max].
struct ControlLimits
{
  double a_max{2.0};
  double b_max{8.0};

  /// Out-of-range commands are clamped, never rejected. NaN maps to zero.
  [[nodiscard]] ControlInput clamp(ControlInput input) const;

  bool operator==(const ControlLimits &) const = default;
};

enum class TrafficBehavior { kConstantAccel, kFollowIdm };

[[nodiscard]] std::string_view to_string(TrafficBehavior behavior);
[[nodiscard]] std::optional<TrafficBehavior> traffic_behavior_from_string(std::string_view s);

struct TrafficVehicle
{
  VehicleState state;
  TrafficBehavior behavior{TrafficBehavior::kConstantAccel};
  double desired_speed{0.0};  // [m/s] used by kFollowIdm

  bool operator==(const TrafficVehicle &) const = default;
};

struct Collision
{
  VehicleId actor_id{0};
  double time{0.0};  // [s]

  bool operator==(const Collision &) const = default;
};

struct WorldState
{
  Tick tick{0};
  double time{0.0};  // [s] always tick * dt
  VehicleState ego;
  std::vector<TrafficVehicle> traffic;  // sorted by id
  LaneConfig lanes;
  std::optional<Collision> collision;  // ego contact observed at this tick

  bool operator==(const WorldState &) const = default;
};

/// Everything step_world needs beyond the world itself.
struct SimParams
{
  double dt{kDefaultDt};
  double lane_change_duration{kLaneChangeDuration};
  ControlLimits limits;
  autopilot::IdmParams traffic_idm;

  bool operator==(const SimParams &) const = default;
};

}  // namespace shadowpilot::sim

#endif  // SHADOWPILOT__SIM__TYPES_HPP_
