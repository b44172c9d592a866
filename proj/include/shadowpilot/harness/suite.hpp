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

#ifndef SHADOWPILOT__HARNESS__SUITE_HPP_
#define SHADOWPILOT__HARNESS__SUITE_HPP_

#include "shadowpilot/autopilot/mpc_config.hpp"
#include "shadowpilot/sim/scenario.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace shadowpilot::harness
{

inline constexpr double kTestScenarioDuration = 5.0;  // [s]
inline constexpr double kSwitchWindowOpen = 0.5;      // [s] exclusive
inline constexpr double kSwitchWindowClose = 4.5;     // [s] exclusive
inline constexpr int kMaxConsecutiveRejections = 10'000;

struct TestScenario
{
  std::string id;
  sim::ScenarioSpec spec;  // carries the autopilot config that produced the ground truth
  sim::Tick ground_truth_tick{0};
  double ground_truth_t{0.0};  // [s] ground_truth_tick * dt

  bool operator==(const TestScenario &) const = default;
};

/// Autopilot configuration of a test scenario (its own block, or the defaults).
[[nodiscard]] autopilot::MpcConfig autopilot_of(const sim::ScenarioSpec & spec);

/// Random 5-second highway scene: an ego closing on a slower lead with adjacent-lane
/// traffic. Deterministic in candidate_seed.
[[nodiscard]] sim::ScenarioSpec sample_candidate(std::uint64_t candidate_seed);

/// Ground-truth switch tick when the target autopilot initiates exactly one lane change
/// inside the open window (0.5 s, 4.5 s) and never collides; nullopt otherwise.
[[nodiscard]] std::optional<sim::Tick> single_switch_tick(const sim::ScenarioSpec & spec);

/// Rejection-samples n test scenarios. Deterministic in seed.
/// Throws ContractViolation when n < 1 and GenerationFailure after
/// kMaxConsecutiveRejections rejected candidates in a row.
[[nodiscard]] std::vector<TestScenario> generate_test_suite(std::uint64_t seed, int n = 8);

/// Seed of the i-th candidate drawn for a suite seed.
[[nodiscard]] std::uint64_t candidate_seed(std::uint64_t suite_seed, std::uint64_t index);

}  // namespace shadowpilot::harness

#endif  // SHADOWPILOT__HARNESS__SUITE_HPP_
