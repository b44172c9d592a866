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

#ifndef SHADOWPILOT__SIM__WORLD_HPP_
#define SHADOWPILOT__SIM__WORLD_HPP_

#include "shadowpilot/sim/types.hpp"

#include <optional>

namespace shadowpilot::sim
{

struct Lead
{
  VehicleId id;
  double gap;  // [m] bumper to bumper
  double v;    // [m/s]
};

/// Nearest vehicle ahead of `follower` whose footprint laterally overlaps it. Considers
/// the ego and all traffic except the follower itself.
[[nodiscard]] std::optional<Lead> nearest_lead(const WorldState & world, VehicleId follower);

/// First traffic actor (in id order) whose footprint overlaps the ego footprint.
[[nodiscard]] std::optional<Collision> check_collision(const WorldState & world);

/// Advances the world by one tick. The ego control is clamped to params.limits; a lane
/// change command starts a maneuver only when none is active and the target lane exists.
/// Traffic accelerations are computed from the pre-step world, so all vehicles update
/// simultaneously.
[[nodiscard]] WorldState step_world(
  const WorldState & world, const ControlInput & ego_control, const SimParams & params);

/// Throws ContractViolation when the world breaks a structural invariant.
void validate_world(const WorldState & world);

}  // namespace shadowpilot::sim

#endif  // SHADOWPILOT__SIM__WORLD_HPP_
