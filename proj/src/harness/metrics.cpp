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

#include "shadowpilot/harness/metrics.hpp"

#include "shadowpilot/errors.hpp"

#include <cmath>

namespace shadowpilot::harness
{

double weighted_l1(
  const std::span<const double> predictions, const std::span<const double> confidences,
  const std::span<const double> ground_truths)
{
  if (predictions.size() != ground_truths.size() || confidences.size() != ground_truths.size()) {
    throw ContractViolation("weighted_l1: predictions, confidences and truths differ in length");
  }
  if (ground_truths.empty()) {
    throw ContractViolation("weighted_l1: no answers");
  }

  double weighted = 0.0;
  double weight_sum = 0.0;
  double plain = 0.0;
  for (std::size_t i = 0; i < ground_truths.size(); ++i) {
    const double c = confidences[i];
    if (!(c >= 0.0)) {
      throw ContractViolation("weighted_l1: confidences must be nonnegative");
    }
    const double error = std::abs(predictions[i] - ground_truths[i]);
    weighted += c * error;
    weight_sum += c;
    plain += error;
  }
  if (weight_sum == 0.0) {
    return plain / static_cast<double>(ground_truths.size());
  }
  return weighted / weight_sum;
}

}  // namespace shadowpilot::harness
