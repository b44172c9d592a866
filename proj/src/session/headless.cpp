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

#include "shadowpilot/session/headless.hpp"

#include "shadowpilot/errors.hpp"
#include "shadowpilot/harness/harness_io.hpp"

#include <algorithm>

namespace shadowpilot::session
{

std::vector<TraceRecord> run_headless(
  const SessionConfig & config, const std::optional<std::vector<sim::ControlInput>> & controls,
  const std::optional<sim::Tick> ticks)
{
  const bool manual = config.mode == SessionMode::kManualPreview;
  if (manual && !controls) {
    throw UsageError("manual_preview needs a control log when run headless");
  }
  if (!manual && controls) {
    throw UsageError(
      "a control log only applies to manual_preview, not " + std::string(to_string(config.mode)));
  }

  Session session(config);
  const auto n = ticks ? *ticks : session.total_ticks();
  if (n < 0 || n > session.total_ticks()) {
    throw UsageError("tick count outside the scenario duration");
  }
  if (manual && static_cast<sim::Tick>(controls->size()) < n) {
    throw UsageError(
      "control log covers " + std::to_string(controls->size()) + " ticks, run needs " +
      std::to_string(n));
  }

  std::vector<TraceRecord> records;
  records.reserve(static_cast<std::size_t>(n));
  for (sim::Tick k = 0; k < n; ++k) {
    records.push_back(
      manual ? session.advance((*controls)[static_cast<std::size_t>(k)]) : session.advance());
  }
  return records;
}

ReplayOutcome replay_trace_text(const std::string & text, const std::string & source)
{
  const auto trace = parse_trace(text, source);
  ReplayOutcome outcome;
  outcome.records = trace.records.size();
  if (static_cast<sim::Tick>(trace.records.size()) != trace.header.ticks) {
    outcome.detail = "header announces " + std::to_string(trace.header.ticks) +
                     " records, file holds " + std::to_string(trace.records.size());
    outcome.first_mismatch_line = trace.records.size() + 2;
    return outcome;
  }

  std::optional<std::vector<sim::ControlInput>> controls;
  if (trace.header.config.mode == SessionMode::kManualPreview) {
    controls.emplace();
    for (const auto & r : trace.records) {
      controls->push_back(r.control);
    }
  }
  const auto records = run_headless(trace.header.config, controls, trace.header.ticks);
  const auto regenerated = serialize_trace(trace.header.config, records);
  if (regenerated == text) {
    outcome.identical = true;
    return outcome;
  }

  const auto diff = std::mismatch(text.begin(), text.end(), regenerated.begin(), regenerated.end());
  outcome.first_mismatch_line =
    1 + static_cast<std::size_t>(std::count(text.begin(), diff.first, '\n'));
  outcome.detail = "regenerated trace differs at line " + std::to_string(outcome.first_mismatch_line);
  return outcome;
}

ReplayOutcome replay_trace_file(const std::filesystem::path & path)
{
  return replay_trace_text(harness::read_text_file(path), path.string());
}

EvaluationFiles evaluate_files(
  const std::filesystem::path & responses, const std::filesystem::path & suite,
  const std::filesystem::path & out)
{
  const auto scenarios = harness::load_suite(suite);
  const auto answers = harness::load_responses(responses);
  EvaluationFiles files;
  files.report = harness::build_report(answers, scenarios);
  files.json = out;
  files.json.replace_extension(".json");
  files.table = out;
  files.table.replace_extension(".txt");
  write_text_file(files.json, harness::to_json(files.report).dump(2) + "\n");
  write_text_file(files.table, harness::format_report_table(files.report));
  return files;
}

}  // namespace shadowpilot::session
