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

#include "shadowpilot/session/session.hpp"

#include "shadowpilot/autopilot/mpc.hpp"
#include "shadowpilot/errors.hpp"
#include "shadowpilot/sim/vehicle.hpp"
#include "shadowpilot/sim/world.hpp"

#include <cmath>
#include <utility>

namespace shadowpilot::session
{

std::string_view to_string(const SessionMode mode)
{
  switch (mode) {
    case SessionMode::kAutopilotObserve:
      return "autopilot_observe";
    case SessionMode::kQuiz:
      return "quiz";
    case SessionMode::kManualPreview:
      break;
  }
  return "manual_preview";
}

std::optional<SessionMode> session_mode_from_string(const std::string_view s)
{
  for (const auto m :
       {SessionMode::kManualPreview, SessionMode::kAutopilotObserve, SessionMode::kQuiz}) {
    if (s == to_string(m)) {
      return m;
    }
  }
  return std::nullopt;
}

void SessionConfig::validate() const
{
  sim::validate(scenario);
  autopilot.validate(scenario.dt);
  prediction.validate();
  if (!(tick_rate > 0.0) || std::abs(tick_rate * scenario.dt - 1.0) > 1e-9) {
    throw ContractViolation("session: tick_rate * dt must equal 1");
  }
  if (std::abs(prediction.dt - scenario.dt) > 1e-12) {
    throw ContractViolation("session: prediction dt must match the scenario dt");
  }
  if (mode == SessionMode::kQuiz && !scenario_id) {
    throw ContractViolation("session: quiz mode requires a suite scenario id");
  }
}

autopilot::MpcConfig AutopilotOverrides::apply(autopilot::MpcConfig cfg) const
{
  cfg.horizon = horizon.value_or(cfg.horizon);
  cfg.v_des = v_des.value_or(cfg.v_des);
  cfg.w_v = w_v.value_or(cfg.w_v);
  cfg.w_lc = w_lc.value_or(cfg.w_lc);
  cfg.min_gap = min_gap.value_or(cfg.min_gap);
  return cfg;
}

SessionConfig make_session_config(const SessionMode mode, const sim::ScenarioSpec & scenario)
{
  SessionConfig cfg;
  cfg.mode = mode;
  cfg.scenario = scenario;
  cfg.autopilot = scenario.autopilot.value_or(autopilot::MpcConfig{});
  cfg.prediction.dt = scenario.dt;
  cfg.tick_rate = 1.0 / scenario.dt;
  return cfg;
}

namespace
{

SessionConfig checked(SessionConfig config)
{
  config.validate();
  return config;
}

}  // namespace

Session::Session(SessionConfig config)
: config_(checked(std::move(config))),
  params_(sim::sim_params_for(config_.scenario)),
  world_(sim::initial_world(config_.scenario)),
  total_ticks_(sim::tick_count(config_.scenario))
{
  if (config_.attach_delegate) {
    delegate_.emplace(
      delegate::make_target_delegate(config_.autopilot, params_, config_.prediction));
  }
}

TraceRecord Session::advance(const sim::ControlInput & human)
{
  if (finished()) {
    throw ContractViolation("session: advance after the last tick");
  }

  TraceRecord record;
  record.tick = world_.tick;
  record.time = world_.time;
  record.ego = world_.ego;
  record.traffic.reserve(world_.traffic.size());
  for (const auto & t : world_.traffic) {
    record.traffic.push_back(t.state);
  }
  record.collision = world_.collision;

  if (delegate_) {
    if (auto event = delegate_->shadow_step(world_)) {
      auto text = explanation::render_explanation(*event);
      record.preview_event = PreviewRecord{std::move(*event), std::move(text)};
    }
  }

  if (config_.mode == SessionMode::kManualPreview) {
    record.control = params_.limits.clamp(human);
  } else {
    const auto decision = autopilot::plan(world_, config_.autopilot, params_);
    record.control = autopilot::to_control(decision, world_.ego);
    if (sim::can_begin_lane_change(world_.ego, record.control.lane_change_cmd, world_.lanes)) {
      record.executed_maneuver_start = decision.maneuver;
    }
  }

  world_ = sim::step_world(world_, record.control, params_);
  return record;
}

}  // namespace shadowpilot::session
