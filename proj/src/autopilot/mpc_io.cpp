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

#include "shadowpilot/autopilot/mpc_io.hpp"

#include "shadowpilot/json_util.hpp"

namespace shadowpilot::autopilot
{

using nlohmann::json;
using namespace json_util;

json to_json(const MpcConfig & cfg)
{
  return {
    {"horizon", cfg.horizon},
    {"v_des", cfg.v_des},
    {"w_v", cfg.w_v},
    {"w_lc", cfg.w_lc},
    {"min_gap", cfg.min_gap},
    {"idm",
     {
       {"a_max", cfg.idm.a_max},
       {"b_comf", cfg.idm.b_comf},
       {"s0", cfg.idm.s0},
       {"T_headway", cfg.idm.time_headway},
       {"delta", cfg.idm.delta},
       {"b_max", cfg.idm.b_max},
     }},
  };
}

MpcConfig mpc_config_from_json(const json & j, const std::string & path)
{
  reject_unknown_keys(j, {"horizon", "v_des", "w_v", "w_lc", "min_gap", "idm"}, path);
  MpcConfig cfg;
  cfg.horizon = number_or(j, "horizon", cfg.horizon, path);
  cfg.v_des = number_or(j, "v_des", cfg.v_des, path);
  cfg.w_v = number_or(j, "w_v", cfg.w_v, path);
  cfg.w_lc = number_or(j, "w_lc", cfg.w_lc, path);
  cfg.min_gap = number_or(j, "min_gap", cfg.min_gap, path);
  if (const auto * idm = optional_field(j, "idm")) {
    const auto idm_path = child(path, "idm");
    reject_unknown_keys(*idm, {"a_max", "b_comf", "s0", "T_headway", "delta", "b_max"}, idm_path);
    cfg.idm.a_max = number_or(*idm, "a_max", cfg.idm.a_max, idm_path);
    cfg.idm.b_comf = number_or(*idm, "b_comf", cfg.idm.b_comf, idm_path);
    cfg.idm.s0 = number_or(*idm, "s0", cfg.idm.s0, idm_path);
    cfg.idm.time_headway = number_or(*idm, "T_headway", cfg.idm.time_headway, idm_path);
    cfg.idm.delta = number_or(*idm, "delta", cfg.idm.delta, idm_path);
    cfg.idm.b_max = number_or(*idm, "b_max", cfg.idm.b_max, idm_path);
  }
  return cfg;
}

}  // namespace shadowpilot::autopilot
