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

#include "shadowpilot/autopilot/driver.hpp"

#include "shadowpilot/autopilot/mpc.hpp"
#include "shadowpilot/sim/vehicle.hpp"
#include "shadowpilot/sim/world.hpp"

namespace shadowpilot::autopilot
{

AutopilotRun drive_scenario(const sim::ScenarioSpec & spec, const MpcConfig & cfg)
{
  const auto params = sim::sim_params_for(spec);
  auto world = sim::initial_world(spec);
  AutopilotRun run;
  run.first_collision = world.collision;
  for (sim::Tick k = 0; k < sim::tick_count(spec); ++k) {
    const auto decision = plan(world, cfg, params);
    const auto control = to_control(decision, world.ego);
    if (sim::can_begin_lane_change(world.ego, control.lane_change_cmd, world.lanes)) {
      run.lane_changes.push_back({world.tick, decision.maneuver});
    }
    world = sim::step_world(world, control, params);
    if (!run.first_collision && world.collision) {
      run.first_collision = world.collision;
    }
  }
  return run;
}

}  // namespace shadowpilot::autopilot
