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

#ifndef SHADOWPILOT__SESSION__TRACE_HPP_
#define SHADOWPILOT__SESSION__TRACE_HPP_

#include "shadowpilot/session/session.hpp"

#include <json.hpp>

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace shadowpilot::session
{

// Trace files are line-delimited JSON. The first line is {"header": {...}} with
// everything needed to re-run the session; every following line is one TraceRecord.

inline constexpr std::string_view kTraceFormat = "shadowpilot-trace";
inline constexpr int kTraceVersion = 1;

struct TraceHeader
{
  SessionConfig config;
  sim::Tick ticks{0};  // records in the file
};

struct Trace
{
  TraceHeader header;
  std::vector<TraceRecord> records;
};

[[nodiscard]] nlohmann::json to_json(const delegate::PreviewEvent & event);
[[nodiscard]] nlohmann::json to_json(const PreviewRecord & preview);
[[nodiscard]] nlohmann::json to_json(const TraceRecord & record);
[[nodiscard]] TraceRecord trace_record_from_json(const nlohmann::json & j, const std::string & path);

[[nodiscard]] nlohmann::json to_json(const TraceHeader & header);
[[nodiscard]] TraceHeader trace_header_from_json(const nlohmann::json & j, const std::string & path);

[[nodiscard]] std::string serialize_trace(
  const SessionConfig & config, std::span<const TraceRecord> records);

/// Throws ParseError with the offending line number.
[[nodiscard]] Trace parse_trace(const std::string & text, const std::string & source);
[[nodiscard]] Trace load_trace(const std::filesystem::path & path);

void write_text_file(const std::filesystem::path & path, const std::string & text);

/// Control logs are line-delimited JSON objects {tick?, a_lon_cmd?, lane_change_cmd?}.
/// A line without a tick applies at the tick after the previous line (0 for the first).
/// Ticks must increase strictly. Blank lines are skipped.
struct ControlLogEntry
{
  sim::Tick tick{0};
  sim::ControlInput control;

  bool operator==(const ControlLogEntry &) const = default;
};

[[nodiscard]] std::vector<ControlLogEntry> parse_control_log(
  const std::string & text, const std::string & source);
[[nodiscard]] std::vector<ControlLogEntry> load_control_log(const std::filesystem::path & path);

/// One control per tick. a_lon_cmd holds until the next entry; a lane change command
/// applies only at its own tick. Entries past the last tick are ignored.
[[nodiscard]] std::vector<sim::ControlInput> expand_control_log(
  std::span<const ControlLogEntry> entries, sim::Tick ticks);

/// Writes one explicit line per tick.
[[nodiscard]] std::string serialize_control_log(std::span<const sim::ControlInput> controls);

}  // namespace shadowpilot::session

#endif  // SHADOWPILOT__SESSION__TRACE_HPP_
