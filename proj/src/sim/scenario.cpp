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

#include "shadowpilot/sim/scenario.hpp"

#include "shadowpilot/errors.hpp"
#include "shadowpilot/sim/world.hpp"

#include <algorithm>
#include <cmath>

namespace shadowpilot::sim
{

void validate(const ScenarioSpec & spec)
{
  if (!(spec.dt > 0.0)) {
    throw ContractViolation("dt must be positive");
  }
  const double ticks = spec.duration / spec.dt;
  if (!(ticks >= 1.0) || std::abs(ticks - std::round(ticks)) > 1e-6) {
    throw ContractViolation("duration / dt must be a positive integer");
  }
  if (spec.autopilot) {
    spec.autopilot->validate(spec.dt);
  }
  for (const auto & t : spec.traffic_init) {
    if (t.behavior == TrafficBehavior::kFollowIdm && !(t.desired_speed > 0.0)) {
      throw ContractViolation(
        "traffic vehicle " + std::to_string(t.state.id) + ": follow-IDM needs desired_speed > 0");
    }
  }
  validate_world(initial_world(spec));
}

Tick tick_count(const ScenarioSpec & spec)
{
  return static_cast<Tick>(std::llround(spec.duration / spec.dt));
}

WorldState initial_world(const ScenarioSpec & spec)
{
  WorldState world;
  world.tick = 0;
  world.time = 0.0;
  world.ego = spec.ego_init;
  world.traffic = spec.traffic_init;
  std::stable_sort(world.traffic.begin(), world.traffic.end(), [](const auto & a, const auto & b) {
    return a.state.id < b.state.id;
  });
  world.lanes = spec.lanes;
  world.collision = check_collision(world);
  return world;
}

SimParams sim_params_for(const ScenarioSpec & spec)
{
  SimParams params;
  params.dt = spec.dt;
  params.lane_change_duration = kLaneChangeDuration;
  params.traffic_idm = spec.autopilot ? spec.autopilot->idm : autopilot::IdmParams{};
  params.limits.a_max = params.traffic_idm.a_max;
  params.limits.b_max = params.traffic_idm.b_max;
  return params;
}

}  // namespace shadowpilot::sim
