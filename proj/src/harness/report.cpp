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

#include "shadowpilot/harness/report.hpp"

#include "shadowpilot/errors.hpp"
#include "shadowpilot/harness/harness_io.hpp"
#include "shadowpilot/harness/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace shadowpilot::harness
{

std::string_view to_string(const Condition condition)
{
  return condition == Condition::kComparison ? "comparison" : "treatment";
}

std::optional<Condition> condition_from_string(const std::string_view s)
{
  if (s == "treatment") {
    return Condition::kTreatment;
  }
  if (s == "comparison") {
    return Condition::kComparison;
  }
  return std::nullopt;
}

GroupStats describe(const std::span<const double> samples)
{
  GroupStats out;
  const auto summary = summarize(samples);
  out.n = summary.n;
  out.mean = summary.mean;
  out.sd = summary.sd;
  if (!samples.empty()) {
    const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
    out.min = *lo;
    out.max = *hi;
  }
  return out;
}

ParticipantResponse normalized(ParticipantResponse response)
{
  for (auto & answer : response.answers) {
    answer.confidence = std::isnan(answer.confidence) ? 0.0 : std::clamp(answer.confidence, 0.0, 1.0);
  }
  return response;
}

namespace
{

std::string fnv1a_hex(const std::string & bytes)
{
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char out[17];
  std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(hash));
  return out;
}

ParticipantScore score_participant(
  const ParticipantResponse & response, std::span<const TestScenario> suite)
{
  std::map<std::string, const ScenarioAnswer *> by_scenario;
  for (const auto & answer : response.answers) {
    if (!by_scenario.emplace(answer.scenario_id, &answer).second) {
      throw IngestionError(
        "participant " + response.participant_id + " answered scenario " + answer.scenario_id +
        " more than once");
    }
  }
  std::map<std::string, const TestScenario *> suite_ids;
  for (const auto & scenario : suite) {
    suite_ids.emplace(scenario.id, &scenario);
  }
  for (const auto & answer : response.answers) {
    if (suite_ids.find(answer.scenario_id) == suite_ids.end()) {
      throw IngestionError(
        "participant " + response.participant_id + " answered unknown scenario " +
        answer.scenario_id);
    }
  }

  std::vector<double> predictions;
  std::vector<double> confidences;
  std::vector<double> truths;
  for (const auto & scenario : suite) {
    const auto it = by_scenario.find(scenario.id);
    if (it == by_scenario.end()) {
      throw IngestionError(
        "participant " + response.participant_id + " is missing an answer for scenario " +
        scenario.id);
    }
    const auto & answer = *it->second;
    if (!(answer.t_hat >= 0.0 && answer.t_hat <= scenario.spec.duration)) {
      throw IngestionError(
        "participant " + response.participant_id + " scenario " + scenario.id +
        ": t_hat outside the scenario duration");
    }
    predictions.push_back(answer.t_hat);
    confidences.push_back(answer.confidence);
    truths.push_back(scenario.ground_truth_t);
  }

  ParticipantScore score;
  score.participant_id = response.participant_id;
  score.condition = response.condition;
  score.weighted_l1 = weighted_l1(predictions, confidences, truths);
  score.mean_confidence = summarize(confidences).mean;
  return score;
}

}  // namespace

MetricsReport build_report(
  const std::span<const ParticipantResponse> responses, const std::span<const TestScenario> suite)
{
  if (responses.empty()) {
    throw IngestionError("no participant responses");
  }
  if (suite.empty()) {
    throw IngestionError("empty test suite");
  }

  MetricsReport report;
  std::vector<ParticipantResponse> clean;
  clean.reserve(responses.size());
  for (const auto & r : responses) {
    clean.push_back(normalized(r));
  }

  std::vector<double> treatment_error;
  std::vector<double> comparison_error;
  std::vector<double> treatment_conf;
  std::vector<double> comparison_conf;
  for (const auto & response : clean) {
    const auto score = score_participant(response, suite);
    report.participants.push_back(score);
    auto & errors = score.condition == Condition::kTreatment ? treatment_error : comparison_error;
    auto & conf = score.condition == Condition::kTreatment ? treatment_conf : comparison_conf;
    errors.push_back(score.weighted_l1);
    conf.push_back(score.mean_confidence);
  }

  if (!treatment_error.empty()) {
    report.treatment = describe(treatment_error);
    report.treatment_confidence = describe(treatment_conf);
  }
  if (!comparison_error.empty()) {
    report.comparison = describe(comparison_error);
    report.comparison_confidence = describe(comparison_conf);
  }
  if (treatment_error.size() >= 2 && comparison_error.size() >= 2) {
    report.t_test = student_t(comparison_error, treatment_error);
    try {
      report.effect_sizes = effect_sizes(comparison_error, treatment_error);
    } catch (const UndefinedEffect &) {
      report.effect_sizes.reset();
    }
  }
  if (!treatment_error.empty() && !comparison_error.empty()) {
    report.error_mann_whitney = mann_whitney_u(comparison_error, treatment_error);
    report.confidence_mann_whitney = mann_whitney_u(comparison_conf, treatment_conf);
  }

  nlohmann::json inputs{
    {"responses", responses_to_json(clean)},
    {"truths", nlohmann::json::array()},
  };
  for (const auto & scenario : suite) {
    inputs["truths"].push_back({{"id", scenario.id}, {"ground_truth_t", scenario.ground_truth_t}});
  }
  report.inputs_hash = fnv1a_hex(inputs.dump());
  return report;
}

namespace
{

std::string fixed(const double value, const int decimals = 2)
{
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
  return buffer;
}

void append_row(std::ostringstream & out, const std::vector<std::string> & cells,
  const std::vector<int> & widths)
{
  for (std::size_t i = 0; i < cells.size(); ++i) {
    char buffer[128];
    if (i == 0) {
      std::snprintf(buffer, sizeof(buffer), "%-*s", widths[i], cells[i].c_str());
    } else {
      std::snprintf(buffer, sizeof(buffer), "  %*s", widths[i], cells[i].c_str());
    }
    out << buffer;
  }
  out << '\n';
}

}  // namespace

std::string format_report_table(const MetricsReport & report)
{
  std::ostringstream out;
  const std::vector<int> widths{12, 3, 6, 6, 6, 6, 9};
  out << "Weighted timing error [s]\n";
  append_row(out, {"group", "n", "mean", "sd", "min", "max", "conf"}, widths);
  const auto row = [&](const std::string & name, const std::optional<GroupStats> & g,
                       const std::optional<GroupStats> & conf) {
    if (!g) {
      append_row(out, {name, "0", "-", "-", "-", "-", "-"}, widths);
      return;
    }
    append_row(
      out,
      {name, std::to_string(g->n), fixed(g->mean), fixed(g->sd), fixed(g->min), fixed(g->max),
       conf ? fixed(conf->mean) : "-"},
      widths);
  };
  row("treatment", report.treatment, report.treatment_confidence);
  row("comparison", report.comparison, report.comparison_confidence);
  out << '\n';

  if (report.t_test) {
    out << "t(" << report.t_test->df << ") = " << fixed(report.t_test->t)
        << ", p(two-tailed) = " << fixed(report.t_test->p_two_tailed, 4)
        << ", p(one-tailed) = " << fixed(report.t_test->p_one_tailed, 4) << '\n';
  } else {
    out << "t-test: needs at least two participants per group\n";
  }
  if (report.effect_sizes) {
    out << "Cohen's d = " << fixed(report.effect_sizes->cohens_d)
        << ", Hedges' g = " << fixed(report.effect_sizes->hedges_g)
        << " (J = " << fixed(report.effect_sizes->correction, 4) << ")\n";
  } else {
    out << "effect sizes: undefined\n";
  }
  const auto mw = [&](const std::string & label, const std::optional<MannWhitneyResult> & r) {
    if (!r) {
      out << label << ": needs both groups\n";
      return;
    }
    out << label << ": U = " << fixed(r->u_a, 1) << ", one-tailed p = " << fixed(r->p_one_tailed, 4)
        << (r->exact ? " (exact)" : " (normal approx.)") << '\n';
  };
  mw("Mann-Whitney (error)", report.error_mann_whitney);
  mw("Mann-Whitney (confidence)", report.confidence_mann_whitney);
  out << "inputs hash: " << report.inputs_hash << '\n';
  return out.str();
}

}  // namespace shadowpilot::harness
