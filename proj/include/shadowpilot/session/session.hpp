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

#ifndef SHADOWPILOT__SESSION__SESSION_HPP_
#define SHADOWPILOT__SESSION__SESSION_HPP_

#include "shadowpilot/autopilot/mpc_config.hpp"
#include "shadowpilot/delegate/delegate_preview.hpp"
#include "shadowpilot/explanation/explanation.hpp"
#include "shadowpilot/prediction/future_prediction.hpp"
#include "shadowpilot/sim/scenario.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace shadowpilot::session
{

/// manual_preview is the treatment condition, autopilot_observe the comparison.
enum class SessionMode { kManualPreview, kAutopilotObserve, kQuiz };

[[nodiscard]] std::string_view to_string(SessionMode mode);
[[nodiscard]] std::optional<SessionMode> session_mode_from_string(std::string_view s);

struct SessionConfig
{
  SessionMode mode{SessionMode::kManualPreview};
  sim::ScenarioSpec scenario;
  autopilot::MpcConfig autopilot;
  prediction::PredictionConfig prediction;
  double tick_rate{10.0};  // [Hz]
  bool attach_delegate{true};
  std::optional<std::string> scenario_id;  // suite reference, required in quiz mode

  /// Throws ContractViolation unless tick_rate * dt = 1, the prediction grid matches the
  /// scenario grid and quiz mode names a suite scenario.
  void validate() const;

  bool operator==(const SessionConfig &) const = default;
};

/// Command-line adjustments of the target autopilot. Traffic keeps the scenario's own
/// parameters.
struct AutopilotOverrides
{
  std::optional<double> horizon;
  std::optional<double> v_des;
  std::optional<double> w_v;
  std::optional<double> w_lc;
  std::optional<double> min_gap;

  [[nodiscard]] autopilot::MpcConfig apply(autopilot::MpcConfig cfg) const;
};

/// Autopilot parameters from the scenario's block (or defaults), prediction on the
/// scenario's grid, tick_rate = 1 / dt.
[[nodiscard]] SessionConfig make_session_config(SessionMode mode, const sim::ScenarioSpec & scenario);

struct PreviewRecord
{
  delegate::PreviewEvent event;
  explanation::Explanation explanation;

  bool operator==(const PreviewRecord &) const = default;
};

/// World at `tick` before stepping, the control applied at that tick and what the
/// delegate announced while observing it.
struct TraceRecord
{
  sim::Tick tick{0};
  double time{0.0};
  sim::VehicleState ego;
  std::vector<sim::VehicleState> traffic;
  sim::ControlInput control;
  std::optional<PreviewRecord> preview_event;
  std::optional<autopilot::Maneuver> executed_maneuver_start;
  std::optional<sim::Collision> collision;

  bool operator==(const TraceRecord &) const = default;
};

/// Lockstep session on a single timeline. Not thread safe; one owner per session.
class Session
{
public:
  explicit Session(SessionConfig config);

  [[nodiscard]] const SessionConfig & config() const { return config_; }
  [[nodiscard]] const sim::WorldState & world() const { return world_; }
  [[nodiscard]] sim::Tick total_ticks() const { return total_ticks_; }
  [[nodiscard]] bool finished() const { return world_.tick >= total_ticks_; }

  /// Records the current tick and steps the world once. `human` actuates only in
  /// manual_preview; the autopilot drives the other modes. Throws ContractViolation
  /// when the session has finished.
  TraceRecord advance(const sim::ControlInput & human = {});

private:
  SessionConfig config_;
  sim::SimParams params_;
  sim::WorldState world_;
  sim::Tick total_ticks_;
  std::optional<delegate::DelegatePreview> delegate_;
};

}  // namespace shadowpilot::session

#endif  // SHADOWPILOT__SESSION__SESSION_HPP_
