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

#include "shadowpilot/sim/scenario_io.hpp"

#include "shadowpilot/autopilot/mpc_io.hpp"
#include "shadowpilot/errors.hpp"
#include "shadowpilot/json_util.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace shadowpilot::sim
{

using nlohmann::json;
using namespace json_util;

json to_json(const VehicleState & state)
{
  json j{
    {"id", state.id},
    {"s", state.s},
    {"lane", state.lane},
    {"lat_offset", state.lat_offset},
    {"v", state.v},
    {"a_lon", state.a_lon},
    {"a_lat", state.a_lat},
    {"length", state.length},
    {"width", state.width},
  };
  if (state.maneuver_progress) {
    j["maneuver_progress"] = *state.maneuver_progress;
  }
  if (state.maneuver_target_lane) {
    j["maneuver_target_lane"] = *state.maneuver_target_lane;
  }
  return j;
}

VehicleState vehicle_from_json(const json & j, const std::string & path)
{
  reject_unknown_keys(
    j,
    {"id", "s", "lane", "lat_offset", "v", "a_lon", "a_lat", "maneuver_progress",
     "maneuver_target_lane", "length", "width"},
    path);
  VehicleState v;
  v.id = as_integer(required(j, "id", path), child(path, "id"));
  v.s = as_number(required(j, "s", path), child(path, "s"));
  v.lane = static_cast<int>(as_integer(required(j, "lane", path), child(path, "lane")));
  v.v = as_number(required(j, "v", path), child(path, "v"));
  v.lat_offset = number_or(j, "lat_offset", 0.0, path);
  v.a_lon = number_or(j, "a_lon", 0.0, path);
  v.a_lat = number_or(j, "a_lat", 0.0, path);
  v.length = number_or(j, "length", kDefaultVehicleLength, path);
  v.width = number_or(j, "width", kDefaultVehicleWidth, path);
  if (const auto * p = optional_field(j, "maneuver_progress")) {
    v.maneuver_progress = as_number(*p, child(path, "maneuver_progress"));
  }
  if (const auto * p = optional_field(j, "maneuver_target_lane")) {
    v.maneuver_target_lane =
      static_cast<int>(as_integer(*p, child(path, "maneuver_target_lane")));
  }
  return v;
}

json to_json(const LaneConfig & lanes)
{
  return {
    {"lane_count", lanes.lane_count},
    {"lane_width", lanes.lane_width},
    {"road_length", lanes.road_length},
  };
}

namespace
{

LaneConfig lanes_from_json(const json & j, const std::string & path)
{
  reject_unknown_keys(j, {"lane_count", "lane_width", "road_length"}, path);
  LaneConfig lanes;
  lanes.lane_count =
    static_cast<int>(as_integer(required(j, "lane_count", path), child(path, "lane_count")));
  lanes.lane_width = number_or(j, "lane_width", kDefaultLaneWidth, path);
  lanes.road_length = as_number(required(j, "road_length", path), child(path, "road_length"));
  return lanes;
}

TrafficVehicle traffic_from_json(const json & j, const std::string & path)
{
  reject_unknown_keys(j, {"state", "behavior", "desired_speed"}, path);
  TrafficVehicle t;
  t.state = vehicle_from_json(required(j, "state", path), child(path, "state"));
  const auto behavior = as_string(required(j, "behavior", path), child(path, "behavior"));
  const auto parsed = traffic_behavior_from_string(behavior);
  if (!parsed) {
    throw ContractViolation(child(path, "behavior") + ": unknown behavior '" + behavior + "'");
  }
  t.behavior = *parsed;
  t.desired_speed = number_or(j, "desired_speed", t.state.v, path);
  return t;
}

}  // namespace

json to_json(const ControlInput & control)
{
  return {
    {"a_lon_cmd", control.a_lon_cmd},
    {"lane_change_cmd", std::string(to_string(control.lane_change_cmd))},
  };
}

ControlInput control_from_json(const json & j, const std::string & path)
{
  ControlInput control;
  control.a_lon_cmd = number_or(j, "a_lon_cmd", 0.0, path);
  if (const auto * p = optional_field(j, "lane_change_cmd")) {
    const auto text = as_string(*p, child(path, "lane_change_cmd"));
    const auto cmd = lane_change_command_from_string(text);
    if (!cmd) {
      throw ContractViolation(
        child(path, "lane_change_cmd") + ": expected none, left or right, got '" + text + "'");
    }
    control.lane_change_cmd = *cmd;
  }
  return control;
}

json to_json(const Collision & collision)
{
  return {{"actor_id", collision.actor_id}, {"time", collision.time}};
}

json to_json(const ScenarioSpec & spec)
{
  json traffic = json::array();
  for (const auto & t : spec.traffic_init) {
    traffic.push_back({
      {"state", to_json(t.state)},
      {"behavior", std::string(to_string(t.behavior))},
      {"desired_speed", t.desired_speed},
    });
  }
  json j{
    {"seed", spec.seed},
    {"duration", spec.duration},
    {"dt", spec.dt},
    {"lanes", to_json(spec.lanes)},
    {"ego_init", to_json(spec.ego_init)},
    {"traffic_init", std::move(traffic)},
  };
  if (spec.autopilot) {
    j["autopilot"] = autopilot::to_json(*spec.autopilot);
  }
  return j;
}

ScenarioSpec scenario_from_json(const json & j)
{
  const std::string path = "$";
  reject_unknown_keys(
    j, {"seed", "duration", "dt", "lanes", "ego_init", "traffic_init", "autopilot"}, path);
  ScenarioSpec spec;
  spec.seed = as_unsigned(required(j, "seed", path), child(path, "seed"));
  spec.duration = as_number(required(j, "duration", path), child(path, "duration"));
  spec.dt = number_or(j, "dt", kDefaultDt, path);
  spec.lanes = lanes_from_json(required(j, "lanes", path), child(path, "lanes"));
  spec.ego_init = vehicle_from_json(required(j, "ego_init", path), child(path, "ego_init"));
  if (const auto * traffic = optional_field(j, "traffic_init")) {
    if (!traffic->is_array()) {
      throw ContractViolation(child(path, "traffic_init") + ": expected an array");
    }
    for (std::size_t i = 0; i < traffic->size(); ++i) {
      spec.traffic_init.push_back(traffic_from_json(
        (*traffic)[i], child(path, "traffic_init") + "[" + std::to_string(i) + "]"));
    }
  }
  if (const auto * ap = optional_field(j, "autopilot")) {
    spec.autopilot = autopilot::mpc_config_from_json(*ap, child(path, "autopilot"));
  }
  validate(spec);
  return spec;
}

std::size_t line_of_offset(const std::string & text, std::size_t offset)
{
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(
               std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

ScenarioSpec parse_scenario(const std::string & text, const std::string & source)
{
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error & e) {
    throw ParseError(source, line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0), e.what());
  }
  try {
    return scenario_from_json(j);
  } catch (const ContractViolation & e) {
    throw ParseError(source, 0, e.what());
  }
}

ScenarioSpec load_scenario(const std::filesystem::path & path)
{
  std::ifstream in(path);
  if (!in) {
    throw ParseError(path.string(), 0, "cannot open file");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str(), path.string());
}

}  // namespace shadowpilot::sim
