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

#ifndef SHADOWPILOT__SIM__SCENARIO_IO_HPP_
#define SHADOWPILOT__SIM__SCENARIO_IO_HPP_

#include "shadowpilot/sim/scenario.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace shadowpilot::sim
{

// Strict JSON mapping: unknown keys are rejected, optional keys take their defaults.
// Schema errors throw ContractViolation carrying the offending JSON path.

[[nodiscard]] nlohmann::json to_json(const VehicleState & state);
[[nodiscard]] VehicleState vehicle_from_json(const nlohmann::json & j, const std::string & path);

[[nodiscard]] nlohmann::json to_json(const LaneConfig & lanes);
[[nodiscard]] nlohmann::json to_json(const ControlInput & control);
[[nodiscard]] ControlInput control_from_json(const nlohmann::json & j, const std::string & path);
[[nodiscard]] nlohmann::json to_json(const Collision & collision);

[[nodiscard]] nlohmann::json to_json(const ScenarioSpec & spec);
[[nodiscard]] ScenarioSpec scenario_from_json(const nlohmann::json & j);

/// Parses and validates a scenario document. Throws ParseError with the line number of
/// syntax errors, or line 0 with the JSON path of schema errors.
[[nodiscard]] ScenarioSpec parse_scenario(const std::string & text, const std::string & source);
[[nodiscard]] ScenarioSpec load_scenario(const std::filesystem::path & path);

/// 1-based line of a byte offset into text.
[[nodiscard]] std::size_t line_of_offset(const std::string & text, std::size_t offset);

}  // namespace shadowpilot::sim

#endif  // SHADOWPILOT__SIM__SCENARIO_IO_HPP_
