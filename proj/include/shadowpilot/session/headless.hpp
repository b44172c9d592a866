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

#ifndef SHADOWPILOT__SESSION__HEADLESS_HPP_
#define SHADOWPILOT__SESSION__HEADLESS_HPP_

#include "shadowpilot/harness/report.hpp"
#include "shadowpilot/session/session.hpp"
#include "shadowpilot/session/trace.hpp"

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace shadowpilot::session
{

/// Runs a session to completion, or for `ticks` ticks when given.
/// manual_preview needs one control per tick; the autopilot modes take none.
/// Throws UsageError on a mode/log mismatch or a control log shorter than the run.
[[nodiscard]] std::vector<TraceRecord> run_headless(
  const SessionConfig & config,
  const std::optional<std::vector<sim::ControlInput>> & controls = std::nullopt,
  std::optional<sim::Tick> ticks = std::nullopt);

struct ReplayOutcome
{
  bool identical{false};
  std::size_t records{0};
  std::size_t first_mismatch_line{0};  // 1-based; 0 when identical
  std::string detail;
};

/// Re-runs the session described by a trace file, feeding back its control column in
/// manual_preview, and compares the regenerated file byte for byte.
[[nodiscard]] ReplayOutcome replay_trace_text(const std::string & text, const std::string & source);
[[nodiscard]] ReplayOutcome replay_trace_file(const std::filesystem::path & path);

struct EvaluationFiles
{
  std::filesystem::path json;
  std::filesystem::path table;
  harness::MetricsReport report;
};

/// Scores a responses file against a suite file and writes <out>.json and <out>.txt
/// (any extension on `out` is replaced).
EvaluationFiles evaluate_files(
  const std::filesystem::path & responses, const std::filesystem::path & suite,
  const std::filesystem::path & out);

}  // namespace shadowpilot::session

#endif  // SHADOWPILOT__SESSION__HEADLESS_HPP_
