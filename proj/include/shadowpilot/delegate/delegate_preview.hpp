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

#ifndef SHADOWPILOT__DELEGATE__DELEGATE_PREVIEW_HPP_
#define SHADOWPILOT__DELEGATE__DELEGATE_PREVIEW_HPP_

#include "shadowpilot/autopilot/mpc.hpp"
#include "shadowpilot/delegate/preview_event.hpp"
#include "shadowpilot/prediction/future_prediction.hpp"
#include "shadowpilot/sim/types.hpp"

#include <functional>
#include <optional>

namespace shadowpilot::delegate
{

using PolicyFn = std::function<autopilot::PlanResult(const sim::WorldState &)>;
using PredictorFn = std::function<prediction::PredictedEffect(
  const sim::WorldState &, const autopilot::PlanResult &)>;

/// Shadow copy of a driving policy. It observes the live world and announces what the
/// policy would do, but its only output is an optional PreviewEvent: there is no path
/// from here to a ControlInput.
///
/// An event is emitted on the first call, when the proposal changes (a lane change is
/// identified by its target lane, so a second change in the same direction counts as a
/// new proposal), or when the predicted effect is more severe than at the last emission.
class DelegatePreview
{
public:
  DelegatePreview(PolicyFn policy, PredictorFn predictor);

  [[nodiscard]] std::optional<PreviewEvent> shadow_step(const sim::WorldState & world);

  [[nodiscard]] const std::optional<PreviewEvent> & last_emission() const { return last_; }

private:
  PolicyFn policy_;
  PredictorFn predictor_;
  std::optional<PreviewEvent> last_;
};

/// The default configuration: the delegate wraps the target MPC itself and predicts
/// with the kinematic collision estimator.
[[nodiscard]] DelegatePreview make_target_delegate(
  const autopilot::MpcConfig & cfg, const sim::SimParams & sim,
  const prediction::PredictionConfig & prediction_cfg);

}  // namespace shadowpilot::delegate

#endif  // SHADOWPILOT__DELEGATE__DELEGATE_PREVIEW_HPP_
