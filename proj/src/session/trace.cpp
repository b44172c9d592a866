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

#include "shadowpilot/session/trace.hpp"

#include "shadowpilot/autopilot/mpc_io.hpp"
#include "shadowpilot/errors.hpp"
#include "shadowpilot/json_util.hpp"
#include "shadowpilot/sim/scenario_io.hpp"

#include <fstream>
#include <sstream>

namespace shadowpilot::session
{

using nlohmann::json;
using namespace json_util;

namespace
{

template <typename Enum, typename Parse>
Enum parse_enum(const json & j, const std::string & path, Parse parse)
{
  const auto text = as_string(j, path);
  const auto value = parse(text);
  if (!value) {
    throw ContractViolation(path + ": unknown value '" + text + "'");
  }
  return *value;
}

std::optional<explanation::Severity> severity_from_string(const std::string_view s)
{
  for (const auto v :
       {explanation::Severity::kInfo, explanation::Severity::kWarning,
        explanation::Severity::kCritical}) {
    if (s == explanation::to_string(v)) {
      return v;
    }
  }
  return std::nullopt;
}

json to_json(const prediction::PredictedEffect & effect)
{
  json j = {{"kind", std::string(prediction::to_string(effect.kind))}};
  if (effect.ttc) {
    j["ttc"] = *effect.ttc;
  }
  if (effect.actor_id) {
    j["actor_id"] = *effect.actor_id;
  }
  return j;
}

prediction::PredictedEffect effect_from_json(const json & j, const std::string & path)
{
  reject_unknown_keys(j, {"kind", "ttc", "actor_id"}, path);
  prediction::PredictedEffect effect;
  effect.kind = parse_enum<prediction::EffectKind>(
    required(j, "kind", path), child(path, "kind"), prediction::effect_kind_from_string);
  if (const auto * p = optional_field(j, "ttc")) {
    effect.ttc = as_number(*p, child(path, "ttc"));
  }
  if (const auto * p = optional_field(j, "actor_id")) {
    effect.actor_id = as_integer(*p, child(path, "actor_id"));
  }
  return effect;
}

json to_json(const explanation::Explanation & e)
{
  return {
    {"severity", std::string(explanation::to_string(e.severity))},
    {"template_id", e.template_id},
    {"text", e.text},
    {"params", e.params},
  };
}

explanation::Explanation explanation_from_json(const json & j, const std::string & path)
{
  reject_unknown_keys(j, {"severity", "template_id", "text", "params"}, path);
  explanation::Explanation e;
  e.severity = parse_enum<explanation::Severity>(
    required(j, "severity", path), child(path, "severity"), severity_from_string);
  e.template_id = as_string(required(j, "template_id", path), child(path, "template_id"));
  e.text = as_string(required(j, "text", path), child(path, "text"));
  const auto & params = required(j, "params", path);
  expect_object(params, child(path, "params"));
  for (const auto & item : params.items()) {
    e.params[item.key()] = as_string(item.value(), child(child(path, "params"), item.key()));
  }
  return e;
}

delegate::PreviewEvent preview_event_from_json(const json & j, const std::string & path)
{
  delegate::PreviewEvent event;
  event.tick = as_integer(required(j, "tick", path), child(path, "tick"));
  event.time = as_number(required(j, "time", path), child(path, "time"));
  event.proposed_maneuver = parse_enum<autopilot::Maneuver>(
    required(j, "proposed_maneuver", path), child(path, "proposed_maneuver"),
    autopilot::maneuver_from_string);
  event.target_lane =
    static_cast<int>(as_integer(required(j, "target_lane", path), child(path, "target_lane")));
  event.proposed_a_lon =
    as_number(required(j, "proposed_a_lon", path), child(path, "proposed_a_lon"));
  event.effect = effect_from_json(required(j, "effect", path), child(path, "effect"));
  event.explanation_id =
    as_string(required(j, "explanation_id", path), child(path, "explanation_id"));
  event.trigger = parse_enum<delegate::PreviewTrigger>(
    required(j, "trigger", path), child(path, "trigger"), delegate::preview_trigger_from_string);
  return event;
}

sim::Collision collision_from_json(const json & j, const std::string & path)
{
  reject_unknown_keys(j, {"actor_id", "time"}, path);
  return {
    as_integer(required(j, "actor_id", path), child(path, "actor_id")),
    as_number(required(j, "time", path), child(path, "time")),
  };
}

json to_json(const prediction::PredictionConfig & cfg)
{
  return {
    {"horizon", cfg.horizon},
    {"dt", cfg.dt},
    {"lane_change_duration", cfg.lane_change_duration},
  };
}

prediction::PredictionConfig prediction_from_json(const json & j, const std::string & path)
{
  reject_unknown_keys(j, {"horizon", "dt", "lane_change_duration"}, path);
  prediction::PredictionConfig cfg;
  cfg.horizon = number_or(j, "horizon", cfg.horizon, path);
  cfg.dt = number_or(j, "dt", cfg.dt, path);
  cfg.lane_change_duration = number_or(j, "lane_change_duration", cfg.lane_change_duration, path);
  return cfg;
}

std::vector<std::string> split_lines(const std::string & text)
{
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

bool blank(const std::string & line)
{
  return line.find_first_not_of(" \t") == std::string::npos;
}

json parse_line(const std::string & line, const std::string & source, const std::size_t number)
{
  try {
    return json::parse(line);
  } catch (const json::parse_error & e) {
    throw ParseError(source, number, e.what());
  }
}

}  // namespace

json to_json(const delegate::PreviewEvent & event)
{
  return {
    {"tick", event.tick},
    {"time", event.time},
    {"proposed_maneuver", std::string(autopilot::to_string(event.proposed_maneuver))},
    {"target_lane", event.target_lane},
    {"proposed_a_lon", event.proposed_a_lon},
    {"effect", to_json(event.effect)},
    {"explanation_id", event.explanation_id},
    {"trigger", std::string(delegate::to_string(event.trigger))},
  };
}

json to_json(const PreviewRecord & preview)
{
  auto j = to_json(preview.event);
  j["explanation"] = to_json(preview.explanation);
  return j;
}

json to_json(const TraceRecord & record)
{
  json traffic = json::array();
  for (const auto & t : record.traffic) {
    traffic.push_back(sim::to_json(t));
  }
  json j = {
    {"tick", record.tick},
    {"time", record.time},
    {"ego", sim::to_json(record.ego)},
    {"traffic", std::move(traffic)},
    {"control", sim::to_json(record.control)},
  };
  if (record.preview_event) {
    j["preview_event"] = to_json(*record.preview_event);
  }
  if (record.executed_maneuver_start) {
    j["executed_maneuver_start"] = std::string(autopilot::to_string(*record.executed_maneuver_start));
  }
  if (record.collision) {
    j["collision"] = sim::to_json(*record.collision);
  }
  return j;
}

TraceRecord trace_record_from_json(const json & j, const std::string & path)
{
  reject_unknown_keys(
    j,
    {"tick", "time", "ego", "traffic", "control", "preview_event", "executed_maneuver_start",
     "collision"},
    path);
  TraceRecord r;
  r.tick = as_integer(required(j, "tick", path), child(path, "tick"));
  r.time = as_number(required(j, "time", path), child(path, "time"));
  r.ego = sim::vehicle_from_json(required(j, "ego", path), child(path, "ego"));
  const auto & traffic = required(j, "traffic", path);
  if (!traffic.is_array()) {
    throw ContractViolation(child(path, "traffic") + ": expected an array");
  }
  for (std::size_t i = 0; i < traffic.size(); ++i) {
    r.traffic.push_back(
      sim::vehicle_from_json(traffic[i], child(path, "traffic") + "[" + std::to_string(i) + "]"));
  }
  const auto & control = required(j, "control", path);
  reject_unknown_keys(control, {"a_lon_cmd", "lane_change_cmd"}, child(path, "control"));
  r.control = sim::control_from_json(control, child(path, "control"));
  if (const auto * p = optional_field(j, "preview_event")) {
    const auto ppath = child(path, "preview_event");
    json event = *p;
    expect_object(event, ppath);
    const auto it = event.find("explanation");
    if (it == event.end()) {
      throw ContractViolation(child(ppath, "explanation") + ": missing required field");
    }
    auto text = explanation_from_json(*it, child(ppath, "explanation"));
    event.erase(it);
    reject_unknown_keys(
      event,
      {"tick", "time", "proposed_maneuver", "target_lane", "proposed_a_lon", "effect",
       "explanation_id", "trigger"},
      ppath);
    r.preview_event = PreviewRecord{preview_event_from_json(event, ppath), std::move(text)};
  }
  if (const auto * p = optional_field(j, "executed_maneuver_start")) {
    r.executed_maneuver_start = parse_enum<autopilot::Maneuver>(
      *p, child(path, "executed_maneuver_start"), autopilot::maneuver_from_string);
  }
  if (const auto * p = optional_field(j, "collision")) {
    r.collision = collision_from_json(*p, child(path, "collision"));
  }
  return r;
}

json to_json(const TraceHeader & header)
{
  const auto & cfg = header.config;
  json j = {
    {"format", std::string(kTraceFormat)},
    {"version", kTraceVersion},
    {"mode", std::string(to_string(cfg.mode))},
    {"attach_delegate", cfg.attach_delegate},
    {"tick_rate", cfg.tick_rate},
    {"ticks", header.ticks},
    {"scenario", sim::to_json(cfg.scenario)},
    {"autopilot", autopilot::to_json(cfg.autopilot)},
    {"prediction", to_json(cfg.prediction)},
  };
  if (cfg.scenario_id) {
    j["scenario_id"] = *cfg.scenario_id;
  }
  return j;
}

TraceHeader trace_header_from_json(const json & j, const std::string & path)
{
  reject_unknown_keys(
    j,
    {"format", "version", "mode", "attach_delegate", "tick_rate", "ticks", "scenario",
     "autopilot", "prediction", "scenario_id"},
    path);
  if (as_string(required(j, "format", path), child(path, "format")) != kTraceFormat) {
    throw ContractViolation(child(path, "format") + ": not a trace file");
  }
  if (as_integer(required(j, "version", path), child(path, "version")) != kTraceVersion) {
    throw ContractViolation(child(path, "version") + ": unsupported trace version");
  }
  TraceHeader header;
  auto & cfg = header.config;
  cfg.mode = parse_enum<SessionMode>(
    required(j, "mode", path), child(path, "mode"), session_mode_from_string);
  cfg.attach_delegate =
    as_bool(required(j, "attach_delegate", path), child(path, "attach_delegate"));
  cfg.tick_rate = as_number(required(j, "tick_rate", path), child(path, "tick_rate"));
  header.ticks = as_integer(required(j, "ticks", path), child(path, "ticks"));
  cfg.scenario = sim::scenario_from_json(required(j, "scenario", path));
  cfg.autopilot =
    autopilot::mpc_config_from_json(required(j, "autopilot", path), child(path, "autopilot"));
  cfg.prediction = prediction_from_json(required(j, "prediction", path), child(path, "prediction"));
  if (const auto * p = optional_field(j, "scenario_id")) {
    cfg.scenario_id = as_string(*p, child(path, "scenario_id"));
  }
  cfg.validate();
  if (header.ticks < 0 || header.ticks > sim::tick_count(cfg.scenario)) {
    throw ContractViolation(child(path, "ticks") + ": outside the scenario duration");
  }
  return header;
}

std::string serialize_trace(const SessionConfig & config, const std::span<const TraceRecord> records)
{
  const TraceHeader header{config, static_cast<sim::Tick>(records.size())};
  std::string out = json{{"header", to_json(header)}}.dump();
  out += '\n';
  for (const auto & r : records) {
    out += to_json(r).dump();
    out += '\n';
  }
  return out;
}

Trace parse_trace(const std::string & text, const std::string & source)
{
  const auto lines = split_lines(text);
  Trace trace;
  bool have_header = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto number = i + 1;
    if (blank(lines[i])) {
      continue;
    }
    const auto j = parse_line(lines[i], source, number);
    try {
      if (!have_header) {
        expect_object(j, "$");
        reject_unknown_keys(j, {"header"}, "$");
        trace.header = trace_header_from_json(required(j, "header", "$"), "$.header");
        have_header = true;
        continue;
      }
      auto record = trace_record_from_json(j, "$");
      const auto expected = static_cast<sim::Tick>(trace.records.size());
      if (record.tick != expected) {
        throw ContractViolation(
          "$.tick: expected " + std::to_string(expected) + ", got " + std::to_string(record.tick));
      }
      trace.records.push_back(std::move(record));
    } catch (const ContractViolation & e) {
      throw ParseError(source, number, e.what());
    }
  }
  if (!have_header) {
    throw ParseError(source, 0, "trace has no header line");
  }
  return trace;
}

Trace load_trace(const std::filesystem::path & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError(path.string(), 0, "cannot open file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_trace(buffer.str(), path.string());
}

void write_text_file(const std::filesystem::path & path, const std::string & text)
{
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error(path.string() + ": cannot open for writing");
  }
  out << text;
  if (!out.flush()) {
    throw std::runtime_error(path.string() + ": write failed");
  }
}

std::vector<ControlLogEntry> parse_control_log(const std::string & text, const std::string & source)
{
  std::vector<ControlLogEntry> entries;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto number = i + 1;
    if (blank(lines[i])) {
      continue;
    }
    const auto j = parse_line(lines[i], source, number);
    try {
      reject_unknown_keys(j, {"tick", "a_lon_cmd", "lane_change_cmd"}, "$");
      ControlLogEntry entry;
      const auto next = entries.empty() ? sim::Tick{0} : entries.back().tick + 1;
      if (const auto * p = optional_field(j, "tick")) {
        entry.tick = as_integer(*p, "$.tick");
        if (entry.tick < next) {
          throw ContractViolation("$.tick: ticks must increase strictly and start at 0 or later");
        }
      } else {
        entry.tick = next;
      }
      entry.control = sim::control_from_json(j, "$");
      entries.push_back(entry);
    } catch (const ContractViolation & e) {
      throw ParseError(source, number, e.what());
    }
  }
  return entries;
}

std::vector<ControlLogEntry> load_control_log(const std::filesystem::path & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError(path.string(), 0, "cannot open file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_control_log(buffer.str(), path.string());
}

std::vector<sim::ControlInput> expand_control_log(
  const std::span<const ControlLogEntry> entries, const sim::Tick ticks)
{
  std::vector<sim::ControlInput> controls(static_cast<std::size_t>(std::max<sim::Tick>(ticks, 0)));
  double held = 0.0;
  std::size_t next = 0;
  for (sim::Tick k = 0; k < ticks; ++k) {
    auto & c = controls[static_cast<std::size_t>(k)];
    if (next < entries.size() && entries[next].tick == k) {
      held = entries[next].control.a_lon_cmd;
      c.lane_change_cmd = entries[next].control.lane_change_cmd;
      ++next;
    }
    c.a_lon_cmd = held;
  }
  return controls;
}

std::string serialize_control_log(const std::span<const sim::ControlInput> controls)
{
  std::string out;
  for (std::size_t k = 0; k < controls.size(); ++k) {
    auto j = sim::to_json(controls[k]);
    j["tick"] = k;
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace shadowpilot::session
