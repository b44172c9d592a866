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

#ifndef SHADOWPILOT__SIM__SCENARIO_HPP_
#define SHADOWPILOT__SIM__SCENARIO_HPP_

#include "shadowpilot/autopilot/mpc_config.hpp"
#include "shadowpilot/sim/types.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace shadowpilot::sim
{

struct ScenarioSpec
{
  std::uint64_t seed{0};
  double duration{30.0};  // [s]
  double dt{kDefaultDt};  // [s]
  LaneConfig lanes;
  VehicleState ego_init;
  std::vector<TrafficVehicle> traffic_init;
  std::optional<autopilot::MpcConfig> autopilot;

  bool operator==(const ScenarioSpec &) const = default;
};

/// Throws ContractViolation when duration / dt is not a positive integer or the initial
/// vehicles are inconsistent with the lane configuration.
void validate(const ScenarioSpec & spec);

[[nodiscard]] Tick tick_count(const ScenarioSpec & spec);

[[nodiscard]] WorldState initial_world(const ScenarioSpec & spec);

/// Simulation parameters of a scenario. Traffic IDM and control limits come from the
/// scenario's autopilot block (or its defaults), never from per-session overrides.
[[nodiscard]] SimParams sim_params_for(const ScenarioSpec & spec);

}  // namespace shadowpilot::sim

#endif  // SHADOWPILOT__SIM__SCENARIO_HPP_
