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

#ifndef SHADOWPILOT__AUTOPILOT__MPC_IO_HPP_
#define SHADOWPILOT__AUTOPILOT__MPC_IO_HPP_

#include "shadowpilot/autopilot/mpc_config.hpp"

#include <json.hpp>

#include <string>

namespace shadowpilot::autopilot
{

[[nodiscard]] nlohmann::json to_json(const MpcConfig & cfg);
/// Missing keys keep their defaults; unknown keys are rejected.
[[nodiscard]] MpcConfig mpc_config_from_json(const nlohmann::json & j, const std::string & path);

}  // namespace shadowpilot::autopilot

#endif  // SHADOWPILOT__AUTOPILOT__MPC_IO_HPP_
