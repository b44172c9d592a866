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

#include "shadowpilot/explanation/explanation.hpp"

#include "shadowpilot/errors.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace shadowpilot::explanation
{

using prediction::EffectKind;

std::string_view to_string(const Severity severity)
{
  switch (severity) {
    case Severity::kWarning:
      return "warning";
    case Severity::kCritical:
      return "critical";
    case Severity::kInfo:
      break;
  }
  return "info";
}

Severity severity_for(const EffectKind kind)
{
  switch (kind) {
    case EffectKind::kNone:
      return Severity::kInfo;
    case EffectKind::kCollisionRisk:
      return Severity::kWarning;
    case EffectKind::kTakeOverRequest:
      return Severity::kCritical;
  }
  throw ContractViolation(
    "render_explanation: unknown effect kind " + std::to_string(static_cast<int>(kind)));
}

std::string_view template_id_for(const EffectKind kind)
{
  switch (severity_for(kind)) {
    case Severity::kWarning:
      return kWarningTemplateId;
    case Severity::kCritical:
      return kCriticalTemplateId;
    case Severity::kInfo:
      break;
  }
  return kInfoTemplateId;
}

std::string_view maneuver_phrase(const autopilot::Maneuver maneuver)
{
  switch (maneuver) {
    case autopilot::Maneuver::kChangeLeft:
      return "change to the left lane";
    case autopilot::Maneuver::kChangeRight:
      return "change to the right lane";
    case autopilot::Maneuver::kKeepLane:
      break;
  }
  return "keep lane";
}

std::string format_seconds(const double seconds)
{
  std::array<char, 64> buffer{};
  // Avoid printing "-0.0" for tiny negative rounding noise.
  const double value = std::abs(seconds) < 0.05 ? 0.0 : seconds;
  const auto result = std::to_chars(
    buffer.data(), buffer.data() + buffer.size(), value, std::chars_format::fixed, 1);
  return {buffer.data(), result.ptr};
}

Explanation render_explanation(const delegate::PreviewEvent & event)
{
  Explanation out;
  out.severity = severity_for(event.effect.kind);
  out.template_id = std::string(template_id_for(event.effect.kind));
  const std::string maneuver{maneuver_phrase(event.proposed_maneuver)};

  switch (out.severity) {
    case Severity::kInfo:
      out.params["maneuver"] = maneuver;
      out.text = "Autopilot would " + maneuver + " now.";
      break;
    case Severity::kWarning: {
      if (!event.effect.ttc || !event.effect.actor_id) {
        throw ContractViolation("render_explanation: collision risk needs ttc and actor id");
      }
      const auto actor = std::to_string(*event.effect.actor_id);
      const auto ttc = format_seconds(*event.effect.ttc);
      out.params["maneuver"] = maneuver;
      out.params["actor"] = actor;
      out.params["ttc"] = ttc;
      out.text = "Autopilot would " + maneuver +
                 " now \xE2\x80\x94 predicted collision with vehicle " + actor + " in " + ttc +
                 " s.";
      break;
    }
    case Severity::kCritical:
      out.text = "Autopilot cannot find a safe action \xE2\x80\x94 take over now.";
      break;
  }
  return out;
}

}  // namespace shadowpilot::explanation
