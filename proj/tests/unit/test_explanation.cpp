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

#include "shadowpilot/errors.hpp"
#include "shadowpilot/explanation/explanation.hpp"

#include <gtest/gtest.h>

#include <clocale>
#include <set>

using namespace shadowpilot;
using autopilot::Maneuver;
using explanation::Severity;

namespace
{

delegate::PreviewEvent event(Maneuver m, prediction::PredictedEffect effect)
{
  delegate::PreviewEvent e;
  e.proposed_maneuver = m;
  e.effect = effect;
  return e;
}

}  // namespace

TEST(Explanation, InfoLaneChange)
{
  const auto x = explanation::render_explanation(event(Maneuver::kChangeLeft, {}));
  EXPECT_EQ(x.severity, Severity::kInfo);
  EXPECT_EQ(x.text, "Autopilot would change to the left lane now.");
  EXPECT_EQ(x.template_id, "preview.info.v1");
  EXPECT_EQ(x.params.at("maneuver"), "change to the left lane");
}

TEST(Explanation, InfoKeepAndRight)
{
  EXPECT_EQ(
    explanation::render_explanation(event(Maneuver::kKeepLane, {})).text,
    "Autopilot would keep lane now.");
  EXPECT_EQ(
    explanation::render_explanation(event(Maneuver::kChangeRight, {})).text,
    "Autopilot would change to the right lane now.");
}

TEST(Explanation, WarningCollision)
{
  const auto x = explanation::render_explanation(
    event(Maneuver::kKeepLane, prediction::PredictedEffect::collision_risk(2.1, 3)));
  EXPECT_EQ(x.severity, Severity::kWarning);
  EXPECT_EQ(
    x.text,
    "Autopilot would keep lane now \xE2\x80\x94 predicted collision with vehicle 3 in 2.1 s.");
  EXPECT_EQ(x.params.at("ttc"), "2.1");
  EXPECT_EQ(x.params.at("actor"), "3");
}

TEST(Explanation, CriticalTakeOver)
{
  for (const auto m : {Maneuver::kKeepLane, Maneuver::kChangeLeft, Maneuver::kChangeRight}) {
    const auto x = explanation::render_explanation(
      event(m, prediction::PredictedEffect::take_over_request()));
    EXPECT_EQ(x.severity, Severity::kCritical);
    EXPECT_EQ(x.text, "Autopilot cannot find a safe action \xE2\x80\x94 take over now.");
  }
}

TEST(Explanation, SeverityIsBijectiveOverKinds)
{
  std::set<Severity> seen;
  for (const auto k :
       {prediction::EffectKind::kNone, prediction::EffectKind::kTakeOverRequest,
        prediction::EffectKind::kCollisionRisk}) {
    seen.insert(explanation::severity_for(k));
  }
  EXPECT_EQ(seen.size(), 3u);
  EXPECT_EQ(explanation::severity_for(prediction::EffectKind::kTakeOverRequest), Severity::kCritical);
}

TEST(Explanation, UnknownKindIsContractViolation)
{
  EXPECT_THROW(
    (void)explanation::severity_for(static_cast<prediction::EffectKind>(42)), ContractViolation);
  EXPECT_THROW(
    (void)explanation::render_explanation(
      event(Maneuver::kKeepLane, {static_cast<prediction::EffectKind>(42), {}, {}})),
    ContractViolation);
}

TEST(Explanation, SecondsFormattingIgnoresLocale)
{
  const char * old = std::setlocale(LC_NUMERIC, nullptr);
  const std::string saved = old ? old : "C";
  std::setlocale(LC_NUMERIC, "de_DE.UTF-8");
  EXPECT_EQ(explanation::format_seconds(2.1), "2.1");
  EXPECT_EQ(explanation::format_seconds(0.04), "0.0");
  EXPECT_EQ(explanation::format_seconds(4.96), "5.0");
  std::setlocale(LC_NUMERIC, saved.c_str());
}
