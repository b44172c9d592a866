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

#ifndef SHADOWPILOT__HARNESS__METRICS_HPP_
#define SHADOWPILOT__HARNESS__METRICS_HPP_

#include <span>

namespace shadowpilot::harness
{

/// Confidence-weighted mean absolute timing error, in seconds:
///   sum_i c_i |t_hat_i - t_i| / sum_i c_i
/// Falls back to the unweighted mean when every confidence is zero.
/// Throws ContractViolation on mismatched or empty inputs, or negative confidences.
[[nodiscard]] double weighted_l1(
  std::span<const double> predictions, std::span<const double> confidences,
  std::span<const double> ground_truths);

}  // namespace shadowpilot::harness

#endif  // SHADOWPILOT__HARNESS__METRICS_HPP_
