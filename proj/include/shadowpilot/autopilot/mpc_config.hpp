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

#ifndef SHADOWPILOT__AUTOPILOT__MPC_CONFIG_HPP_
#define SHADOWPILOT__AUTOPILOT__MPC_CONFIG_HPP_

#include "shadowpilot/autopilot/idm.hpp"

namespace shadowpilot::autopilot
{

struct MpcConfig
{
  double horizon{5.0};   // [s]
  double v_des{25.0};    // [m/s]
  double w_v{1.0};       // speed-error weight
  double w_lc{4.0};      // constant lane-change cost
  double min_gap{6.0};   // [m] bumper gap required in the target lane
  IdmParams idm;

  /// Throws ContractViolation unless horizon / dt is a positive integer, weights are
  /// nonnegative and min_gap, v_des are positive.
  void validate(double dt) const;

  bool operator==(const MpcConfig &) const = default;
};

}  // namespace shadowpilot::autopilot

#endif  // SHADOWPILOT__AUTOPILOT__MPC_CONFIG_HPP_
