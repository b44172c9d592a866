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

#ifndef SHADOWPILOT__EXPLANATION__EXPLANATION_HPP_
#define SHADOWPILOT__EXPLANATION__EXPLANATION_HPP_

#include "shadowpilot/delegate/preview_event.hpp"
#include "shadowpilot/prediction/future_prediction.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace shadowpilot::explanation
{

enum class Severity { kInfo, kWarning, kCritical };

[[nodiscard]] std::string_view to_string(Severity severity);

struct Explanation
{
  Severity severity{Severity::kInfo};
  std::string template_id;
  std::string text;
  std::map<std::string, std::string> params;

  bool operator==(const Explanation &) const = default;
};

inline constexpr std::string_view kInfoTemplateId = "preview.info.v1";
inline constexpr std::string_view kWarningTemplateId = "preview.warning.v1";
inline constexpr std::string_view kCriticalTemplateId = "preview.critical.v1";

/// Throws ContractViolation for a kind outside the enum.
[[nodiscard]] Severity severity_for(prediction::EffectKind kind);
[[nodiscard]] std::string_view template_id_for(prediction::EffectKind kind);

/// "keep lane", "change to the left lane", "change to the right lane".
[[nodiscard]] std::string_view maneuver_phrase(autopilot::Maneuver maneuver);

/// One decimal, '.' separator, independent of the global locale.
[[nodiscard]] std::string format_seconds(double seconds);

/// Fixed English templates. Throws ContractViolation on an unknown effect kind or a
/// collision risk without ttc and actor.
[[nodiscard]] Explanation render_explanation(const delegate::PreviewEvent & event);

}  // namespace shadowpilot::explanation

#endif  // SHADOWPILOT__EXPLANATION__EXPLANATION_HPP_
