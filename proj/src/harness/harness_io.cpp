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

#include "shadowpilot/harness/harness_io.hpp"

#include "shadowpilot/errors.hpp"
#include "shadowpilot/json_util.hpp"
#include "shadowpilot/sim/scenario_io.hpp"

#include <fstream>
#include <sstream>

namespace shadowpilot::harness
{

using nlohmann::json;
using namespace json_util;

namespace
{

json parse_document(const std::string & text, const std::string & source)
{
  try {
    return json::parse(text);
  } catch (const json::parse_error & e) {
    throw ParseError(source, sim::line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0), e.what());
  }
}

json summary_json(const std::optional<GroupStats> & g)
{
  if (!g) {
    return nullptr;
  }
  return {{"n", g->n}, {"mean", g->mean}, {"min", g->min}, {"max", g->max}, {"sd", g->sd}};
}

json mann_whitney_json(const std::optional<MannWhitneyResult> & r)
{
  if (!r) {
    return nullptr;
  }
  return {
    {"U", r->u_a},
    {"U_other", r->u_b},
    {"one_tailed_p", r->p_one_tailed},
    {"p_upper", r->p_upper},
    {"p_lower", r->p_lower},
    {"exact", r->exact},
  };
}

}  // namespace

std::string read_text_file(const std::filesystem::path & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError(path.string(), 0, "cannot open file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json suite_to_json(const std::uint64_t seed, const std::span<const TestScenario> suite)
{
  json scenarios = json::array();
  for (const auto & s : suite) {
    scenarios.push_back({
      {"id", s.id},
      {"ground_truth_tick", s.ground_truth_tick},
      {"ground_truth_t", s.ground_truth_t},
      {"spec", sim::to_json(s.spec)},
    });
  }
  return {{"seed", seed}, {"scenarios", std::move(scenarios)}};
}

std::vector<TestScenario> parse_suite(const std::string & text, const std::string & source)
{
  const json doc = parse_document(text, source);
  try {
    reject_unknown_keys(doc, {"seed", "scenarios"}, "$");
    const auto & list = required(doc, "scenarios", "$");
    if (!list.is_array()) {
      throw ContractViolation("$.scenarios: expected an array");
    }
    std::vector<TestScenario> suite;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto path = "$.scenarios[" + std::to_string(i) + "]";
      const auto & item = list[i];
      reject_unknown_keys(item, {"id", "ground_truth_tick", "ground_truth_t", "spec"}, path);
      TestScenario s;
      s.id = as_string(required(item, "id", path), child(path, "id"));
      s.spec = sim::scenario_from_json(required(item, "spec", path));
      s.ground_truth_tick =
        as_integer(required(item, "ground_truth_tick", path), child(path, "ground_truth_tick"));
      s.ground_truth_t =
        as_number(required(item, "ground_truth_t", path), child(path, "ground_truth_t"));
      suite.push_back(std::move(s));
    }
    return suite;
  } catch (const ContractViolation & e) {
    throw ParseError(source, 0, e.what());
  }
}

std::vector<TestScenario> load_suite(const std::filesystem::path & path)
{
  return parse_suite(read_text_file(path), path.string());
}

json to_json(const ParticipantResponse & response)
{
  json answers = json::array();
  for (const auto & a : response.answers) {
    answers.push_back(
      {{"scenario_id", a.scenario_id}, {"t_hat", a.t_hat}, {"confidence", a.confidence}});
  }
  return {
    {"participant_id", response.participant_id},
    {"condition", std::string(to_string(response.condition))},
    {"answers", std::move(answers)},
  };
}

json responses_to_json(const std::span<const ParticipantResponse> responses)
{
  json out = json::array();
  for (const auto & r : responses) {
    out.push_back(to_json(r));
  }
  return out;
}

std::vector<ParticipantResponse> parse_responses(const std::string & text, const std::string & source)
{
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    throw IngestionError(source + ": responses file is empty");
  }
  const json doc = parse_document(text, source);
  std::vector<ParticipantResponse> responses;
  try {
    if (!doc.is_array()) {
      throw ContractViolation("$: expected a list of participant responses");
    }
    for (std::size_t i = 0; i < doc.size(); ++i) {
      const auto path = "$[" + std::to_string(i) + "]";
      const auto & item = doc[i];
      reject_unknown_keys(item, {"participant_id", "condition", "answers"}, path);
      ParticipantResponse r;
      r.participant_id =
        as_string(required(item, "participant_id", path), child(path, "participant_id"));
      const auto condition =
        as_string(required(item, "condition", path), child(path, "condition"));
      const auto parsed = condition_from_string(condition);
      if (!parsed) {
        throw ContractViolation(
          child(path, "condition") + ": expected treatment or comparison, got '" + condition + "'");
      }
      r.condition = *parsed;
      const auto & answers = required(item, "answers", path);
      if (!answers.is_array()) {
        throw ContractViolation(child(path, "answers") + ": expected an array");
      }
      for (std::size_t k = 0; k < answers.size(); ++k) {
        const auto apath = child(path, "answers") + "[" + std::to_string(k) + "]";
        const auto & a = answers[k];
        reject_unknown_keys(a, {"scenario_id", "t_hat", "confidence"}, apath);
        ScenarioAnswer answer;
        answer.scenario_id =
          as_string(required(a, "scenario_id", apath), child(apath, "scenario_id"));
        answer.t_hat = as_number(required(a, "t_hat", apath), child(apath, "t_hat"));
        answer.confidence =
          as_number(required(a, "confidence", apath), child(apath, "confidence"));
        r.answers.push_back(std::move(answer));
      }
      responses.push_back(normalized(std::move(r)));
    }
  } catch (const ContractViolation & e) {
    throw ParseError(source, 0, e.what());
  }
  if (responses.empty()) {
    throw IngestionError(source + ": no participant responses");
  }
  return responses;
}

std::vector<ParticipantResponse> load_responses(const std::filesystem::path & path)
{
  return parse_responses(read_text_file(path), path.string());
}

json to_json(const MetricsReport & report)
{
  json participants = json::array();
  for (const auto & p : report.participants) {
    participants.push_back({
      {"participant_id", p.participant_id},
      {"condition", std::string(to_string(p.condition))},
      {"weighted_l1", p.weighted_l1},
      {"mean_confidence", p.mean_confidence},
    });
  }
  json t_test = nullptr;
  if (report.t_test) {
    t_test = {
      {"t_statistic", report.t_test->t},
      {"df", report.t_test->df},
      {"p_two_tailed", report.t_test->p_two_tailed},
      {"p_one_tailed", report.t_test->p_one_tailed},
    };
  }
  json effects = nullptr;
  if (report.effect_sizes) {
    effects = {
      {"cohens_d", report.effect_sizes->cohens_d},
      {"hedges_g", report.effect_sizes->hedges_g},
      {"correction_J", report.effect_sizes->correction},
    };
  }
  return {
    {"participants", std::move(participants)},
    {"groups",
     {
       {"treatment", summary_json(report.treatment)},
       {"comparison", summary_json(report.comparison)},
     }},
    {"confidence_groups",
     {
       {"treatment", summary_json(report.treatment_confidence)},
       {"comparison", summary_json(report.comparison_confidence)},
     }},
    {"t_test", std::move(t_test)},
    {"effect_sizes", std::move(effects)},
    {"mann_whitney_error", mann_whitney_json(report.error_mann_whitney)},
    {"mann_whitney_confidence", mann_whitney_json(report.confidence_mann_whitney)},
    {"inputs_hash", report.inputs_hash},
  };
}

}  // namespace shadowpilot::harness
