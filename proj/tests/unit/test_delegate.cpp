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

#include "shadowpilot/autopilot/mpc.hpp"
#include "shadowpilot/delegate/delegate_preview.hpp"
#include "shadowpilot/sim/scenario.hpp"
#include "shadowpilot/sim/world.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <type_traits>

using namespace shadowpilot;
using autopilot::Maneuver;
using delegate::PreviewTrigger;
using shadowpilot::testing::constant;
using shadowpilot::testing::vehicle;
using shadowpilot::testing::world_of;

static_assert(
  std::is_same_v<
    decltype(std::declval<delegate::DelegatePreview &>().shadow_step(std::declval<const sim::WorldState &>())),
    std::optional<delegate::PreviewEvent>>,
  "the delegate's only output is an advisory event");

TEST(Delegate, EmptyRoadCruiseAnnouncesOnce)
{
  autopilot::MpcConfig cfg;
  cfg.v_des = 25.0;
  const sim::SimParams params;
  auto d = delegate::make_target_delegate(cfg, params, {});
  auto w = world_of(vehicle(0, 0.0, 1, 25.0));
  int events = 0;
  for (int k = 0; k < 100; ++k) {
    if (const auto e = d.shadow_step(w)) {
      ++events;
      EXPECT_EQ(e->tick, 0);
      EXPECT_EQ(e->trigger, PreviewTrigger::kSessionStart);
      EXPECT_EQ(e->proposed_maneuver, Maneuver::kKeepLane);
      EXPECT_EQ(e->effect.kind, prediction::EffectKind::kNone);
    }
    w = sim::step_world(w, {}, params);
  }
  EXPECT_EQ(events, 1);
}

TEST(Delegate, AnnouncesAtFlipTick)
{
  const auto spec = shadowpilot::testing::scenario_of(
    vehicle(0, 0.0, 0, 25.0), {constant(vehicle(1, 250.0, 0, 15.0))}, 20.0, 2);
  const auto params = sim::sim_params_for(spec);
  autopilot::MpcConfig cfg;
  cfg.v_des = 25.0;

  // Oracle: plan on every tick of a human run that just holds speed.
  std::optional<sim::Tick> flip;
  {
    auto w = sim::initial_world(spec);
    for (sim::Tick k = 0; k < sim::tick_count(spec) && !flip; ++k) {
      if (autopilot::plan(w, cfg, params).maneuver != Maneuver::kKeepLane) {
        flip = k;
      }
      w = sim::step_world(w, {}, params);
    }
  }
  ASSERT_TRUE(flip);
  ASSERT_GT(*flip, 0);

  auto d = delegate::make_target_delegate(cfg, params, {});
  auto w = sim::initial_world(spec);
  std::vector<delegate::PreviewEvent> events;
  for (sim::Tick k = 0; k <= *flip; ++k) {
    if (auto e = d.shadow_step(w)) {
      events.push_back(*e);
    }
    w = sim::step_world(w, {}, params);
  }
  ASSERT_EQ(events.size(), 2u);
  EXPECT_EQ(events[1].tick, *flip);
  EXPECT_EQ(events[1].proposed_maneuver, Maneuver::kChangeLeft);
  EXPECT_EQ(events[1].target_lane, 1);
  EXPECT_EQ(events[1].trigger, PreviewTrigger::kManeuverChange);
}

TEST(Delegate, SeverityEscalationWithUnchangedManeuver)
{
  const auto policy = [](const sim::WorldState &) { return autopilot::PlanResult{}; };
  const auto predictor = [](const sim::WorldState & w, const autopilot::PlanResult &) {
    if (w.tick >= 80) {
      return prediction::PredictedEffect::collision_risk(1.0, 7);
    }
    if (w.tick >= 40) {
      return prediction::PredictedEffect::take_over_request();
    }
    return prediction::PredictedEffect::none();
  };
  delegate::DelegatePreview d(policy, predictor);
  auto w = world_of(vehicle(0, 0.0, 0, 10.0));
  std::vector<delegate::PreviewEvent> events;
  for (sim::Tick k = 0; k < 120; ++k) {
    w.tick = k;
    w.time = static_cast<double>(k) * 0.1;
    if (auto e = d.shadow_step(w)) {
      events.push_back(*e);
    }
  }
  ASSERT_EQ(events.size(), 3u);
  EXPECT_EQ(events[1].tick, 40);
  EXPECT_EQ(events[1].trigger, PreviewTrigger::kSeverityEscalation);
  EXPECT_EQ(events[2].tick, 80);
  EXPECT_EQ(events[2].trigger, PreviewTrigger::kSeverityEscalation);
  EXPECT_EQ(events[2].effect.kind, prediction::EffectKind::kCollisionRisk);
}

TEST(Delegate, DeescalationIsSilent)
{
  const auto policy = [](const sim::WorldState &) { return autopilot::PlanResult{}; };
  const auto predictor = [](const sim::WorldState & w, const autopilot::PlanResult &) {
    return w.tick < 10 ? prediction::PredictedEffect::collision_risk(1.0, 1) : prediction::PredictedEffect::none();
  };
  delegate::DelegatePreview d(policy, predictor);
  auto w = world_of(vehicle(0, 0.0, 0, 10.0));
  int events = 0;
  for (sim::Tick k = 0; k < 30; ++k) {
    w.tick = k;
    events += d.shadow_step(w) ? 1 : 0;
  }
  EXPECT_EQ(events, 1);
}

TEST(Delegate, SecondSameDirectionChangeIsNewProposal)
{
  int call = 0;
  const auto policy = [&call](const sim::WorldState &) {
    ++call;
    return autopilot::PlanResult{Maneuver::kChangeLeft, 0.0, false};
  };
  const auto predictor = [](const sim::WorldState &, const autopilot::PlanResult &) {
    return prediction::PredictedEffect::none();
  };
  delegate::DelegatePreview d(policy, predictor);
  auto w = world_of(vehicle(0, 0.0, 0, 10.0));
  ASSERT_TRUE(d.shadow_step(w));
  w.tick = 1;
  EXPECT_FALSE(d.shadow_step(w));
  w.tick = 2;
  w.ego.lane = 1;
  const auto e = d.shadow_step(w);
  ASSERT_TRUE(e);
  EXPECT_EQ(e->target_lane, 2);
  EXPECT_EQ(e->trigger, PreviewTrigger::kManeuverChange);
}

TEST(Delegate, EventTicksStrictlyIncrease)
{
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    const auto spec = shadowpilot::testing::random_scenario(rng, 150);
    const auto params = sim::sim_params_for(spec);
    auto d = delegate::make_target_delegate(*spec.autopilot, params, {});
    auto w = sim::initial_world(spec);
    const auto controls = shadowpilot::testing::random_controls(rng, 150);
    sim::Tick last = -1;
    for (const auto & c : controls) {
      if (const auto e = d.shadow_step(w)) {
        EXPECT_GT(e->tick, last);
        EXPECT_DOUBLE_EQ(e->time, w.time);
        last = e->tick;
      }
      w = sim::step_world(w, c, params);
    }
  }
}
