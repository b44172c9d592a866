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

#ifndef SHADOWPILOT__HARNESS__REPORT_HPP_
#define SHADOWPILOT__HARNESS__REPORT_HPP_

#include "shadowpilot/harness/statistics.hpp"
#include "shadowpilot/harness/suite.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace shadowpilot::harness
{

enum class Condition { kTreatment, kComparison };

[[nodiscard]] std::string_view to_string(Condition condition);
[[nodiscard]] std::optional<Condition> condition_from_string(std::string_view s);

struct ScenarioAnswer
{
  std::string scenario_id;
  double t_hat{0.0};       // [s]
  double confidence{0.5};  // [0, 1]

  bool operator==(const ScenarioAnswer &) const = default;
};

struct ParticipantResponse
{
  std::string participant_id;
  Condition condition{Condition::kTreatment};
  std::vector<ScenarioAnswer> answers;

  bool operator==(const ParticipantResponse &) const = default;
};

struct ParticipantScore
{
  std::string participant_id;
  Condition condition{Condition::kTreatment};
  double weighted_l1{0.0};
  double mean_confidence{0.0};
};

struct GroupStats
{
  std::size_t n{0};
  double mean{0.0};
  double min{0.0};
  double max{0.0};
  double sd{0.0};
};

[[nodiscard]] GroupStats describe(std::span<const double> samples);

/// Statistics compare A = comparison against B = treatment, so a positive t means the
/// comparison group made larger timing errors.
struct MetricsReport
{
  std::vector<ParticipantScore> participants;
  std::optional<GroupStats> treatment;
  std::optional<GroupStats> comparison;
  std::optional<GroupStats> treatment_confidence;
  std::optional<GroupStats> comparison_confidence;
  std::optional<TTestResult> t_test;
  std::optional<EffectSizes> effect_sizes;
  std::optional<MannWhitneyResult> error_mann_whitney;
  std::optional<MannWhitneyResult> confidence_mann_whitney;
  std::string inputs_hash;
};

/// Clamps confidences into [0, 1].
[[nodiscard]] ParticipantResponse normalized(ParticipantResponse response);

/// Scores every participant against the suite and fills the group statistics. Tests that
/// need at least two participants per group are left empty otherwise.
/// Throws IngestionError for empty input, missing or unknown scenario answers (naming
/// participant and scenario), or an out-of-range t_hat.
[[nodiscard]] MetricsReport build_report(
  std::span<const ParticipantResponse> responses, std::span<const TestScenario> suite);

/// Aligned plain-text rendering of a report.
[[nodiscard]] std::string format_report_table(const MetricsReport & report);

}  // namespace shadowpilot::harness

#endif  // SHADOWPILOT__HARNESS__REPORT_HPP_
