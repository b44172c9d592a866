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

#include "shadowpilot/autopilot/driver.hpp"
#include "shadowpilot/autopilot/idm.hpp"
#include "shadowpilot/autopilot/mpc.hpp"
#include "shadowpilot/autopilot/mpc_io.hpp"
#include "shadowpilot/errors.hpp"
#include "shadowpilot/sim/scenario.hpp"
#include "shadowpilot/sim/vehicle.hpp"
#include "shadowpilot/sim/world.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace shadowpilot;
using autopilot::Maneuver;
using shadowpilot::testing::constant;
using shadowpilot::testing::vehicle;
using shadowpilot::testing::world_of;

namespace
{

constexpr double kInf = std::numeric_limits<double>::infinity();

// Written out from the textbook law, independent of the library implementation.
double idm_reference(double v, double gap, double v_lead, double v_des)
{
  const double a = 2.0;
  const double b = 3.0;
  const double s_star = 2.0 + v * 1.5 + v * (v - v_lead) / (2.0 * std::sqrt(a * b));
  const double interaction = std::isinf(gap) ? 0.0 : (s_star / gap) * (s_star / gap);
  const double raw = a * (1.0 - std::pow(v / v_des, 4.0) - interaction);
  return std::clamp(raw, -8.0, 2.0);
}

autopilot::MpcConfig config(double v_des = 25.0)
{
  autopilot::MpcConfig cfg;
  cfg.v_des = v_des;
  return cfg;
}

}  // namespace

TEST(Idm, CruiseAtDesiredSpeedOnFreeRoad)
{
  EXPECT_NEAR(autopilot::idm_accel(25.0, kInf, 0.0, 25.0, {}), 0.0, 1e-12);
}

TEST(Idm, StandstillOnFreeRoadGetsFullAcceleration)
{
  EXPECT_DOUBLE_EQ(autopilot::idm_accel(0.0, kInf, 0.0, 25.0, {}), 2.0);
}

TEST(Idm, ClosingOnSlowLeadClampsToHardBraking)
{
  const double s_star = autopilot::idm_desired_gap(25.0, 15.0, {});
  EXPECT_NEAR(s_star, 2.0 + 37.5 + 250.0 / (2.0 * std::sqrt(6.0)), 1e-12);
  EXPECT_NEAR(s_star, 90.52, 0.02);
  EXPECT_DOUBLE_EQ(autopilot::idm_accel(25.0, 30.0, 15.0, 25.0, {}), -8.0);
  EXPECT_DOUBLE_EQ(idm_reference(25.0, 30.0, 15.0, 25.0), -8.0);
}

TEST(Idm, AgreesWithScalarReferenceWhenLeadIsSlower)
{
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const double v = 30.0 * u(rng);
    const double v_lead = v * u(rng);  // closing or level, where both forms agree
    const double gap = 0.5 + 150.0 * u(rng);
    const double v_des = 10.0 + 25.0 * u(rng);
    EXPECT_NEAR(
      autopilot::idm_accel(v, gap, v_lead, v_des, {}), idm_reference(v, gap, v_lead, v_des),
      1e-12);
  }
}

TEST(Idm, NonPositiveGapIsContractViolation)
{
  EXPECT_THROW((void)autopilot::idm_accel(10.0, 0.0, 0.0, 25.0, {}), ContractViolation);
  EXPECT_THROW((void)autopilot::idm_accel(10.0, -1.0, 0.0, 25.0, {}), ContractViolation);
}

TEST(Rollout, EmptyRoadKeepLaneCostsNothing)
{
  const auto w = world_of(vehicle(0, 0.0, 0, 25.0));
  const auto plan = autopilot::rollout_plan(w, Maneuver::kKeepLane, config(), {});
  EXPECT_EQ(plan.cost, 0.0);
  EXPECT_EQ(plan.trajectory.size(), 50u);
}

TEST(Rollout, EmptyRoadLaneChangeCostsOnlyPenalty)
{
  const auto w = world_of(vehicle(0, 0.0, 0, 25.0));
  EXPECT_DOUBLE_EQ(autopilot::rollout_plan(w, Maneuver::kChangeLeft, config(), {}).cost, 4.0);
}

TEST(Rollout, MissingTargetLaneIsInfinite)
{
  const auto w = world_of(vehicle(0, 0.0, 0, 25.0));
  const auto plan = autopilot::rollout_plan(w, Maneuver::kChangeRight, config(), {});
  EXPECT_FALSE(plan.feasible());
}

TEST(Rollout, PassingBeatsFollowingSlowLead)
{
  const auto w = world_of(vehicle(0, 0.0, 0, 25.0), {constant(vehicle(1, 34.5, 0, 15.0))}, 2);
  const auto keep = autopilot::rollout_plan(w, Maneuver::kKeepLane, config(), {});
  const auto left = autopilot::rollout_plan(w, Maneuver::kChangeLeft, config(), {});
  ASSERT_TRUE(left.feasible());
  EXPECT_LT(left.cost, keep.cost);
}

TEST(Rollout, TargetLaneGapBelowMinimumIsInfinite)
{
  const auto w = world_of(vehicle(0, 0.0, 0, 25.0), {constant(vehicle(1, 3.0, 1, 25.0))}, 2);
  EXPECT_FALSE(autopilot::rollout_plan(w, Maneuver::kChangeLeft, config(), {}).feasible());
}

TEST(Plan, EmptyRoadKeepsLane)
{
  const auto w = world_of(vehicle(0, 0.0, 1, 25.0));
  const auto decision = autopilot::plan(w, config(), {});
  EXPECT_EQ(decision.maneuver, Maneuver::kKeepLane);
  EXPECT_NEAR(decision.a_lon, 0.0, 1e-12);
  EXPECT_FALSE(decision.infeasible);
}

TEST(Plan, SwitchesAtFirstTickWherePassingIsCheaper)
{
  // Right lane absent (ego in lane 0), left lane clear, slow lead far enough ahead that following wins at first.
  const auto spec = shadowpilot::testing::scenario_of(
    vehicle(0, 0.0, 0, 25.0), {constant(vehicle(1, 250.0, 0, 15.0))}, 10.0, 2);
  const auto params = sim::sim_params_for(spec);
  const auto cfg = config();
  auto w = sim::initial_world(spec);
  std::optional<sim::Tick> oracle_tick;
  std::optional<sim::Tick> plan_tick;
  for (sim::Tick k = 0; k < sim::tick_count(spec) && !plan_tick; ++k) {
    const double keep = autopilot::rollout_plan(w, Maneuver::kKeepLane, cfg, params).cost;
    const double left = autopilot::rollout_plan(w, Maneuver::kChangeLeft, cfg, params).cost;
    const double right = autopilot::rollout_plan(w, Maneuver::kChangeRight, cfg, params).cost;
    EXPECT_EQ(right, kInf);
    if (!oracle_tick && left < keep) {
      oracle_tick = k;
    }
    const auto decision = autopilot::plan(w, cfg, params);
    if (decision.maneuver == Maneuver::kChangeLeft) {
      plan_tick = k;
    }
    w = sim::step_world(w, autopilot::to_control(decision, w.ego), params);
  }
  ASSERT_TRUE(plan_tick);
  EXPECT_GT(*plan_tick, 0);
  EXPECT_EQ(plan_tick, oracle_tick);
}

TEST(Plan, BlockedNeighboursFallBackToFollowing)
{
  const auto w = world_of(
    vehicle(0, 0.0, 1, 25.0),
    {constant(vehicle(1, 34.5, 1, 15.0)), constant(vehicle(2, 2.0, 0, 25.0)),
     constant(vehicle(3, -2.0, 2, 25.0))});
  const auto decision = autopilot::plan(w, config(), {});
  EXPECT_EQ(decision.maneuver, Maneuver::kKeepLane);
  EXPECT_FALSE(decision.infeasible);
  EXPECT_DOUBLE_EQ(decision.a_lon, autopilot::idm_accel(25.0, 30.0, 15.0, 25.0, {}));
  EXPECT_LT(decision.a_lon, 0.0);
}

TEST(Plan, InfeasibleFallback)
{
  // Stopped car immediately ahead in a one-lane road: every candidate collides.
  const auto w = world_of(vehicle(0, 0.0, 0, 30.0), {constant(vehicle(1, 5.0, 0, 0.0))}, 1);
  const auto decision = autopilot::plan(w, config(), {});
  EXPECT_TRUE(decision.infeasible);
  EXPECT_EQ(decision.maneuver, Maneuver::kKeepLane);
  EXPECT_EQ(decision.a_lon, -8.0);
}

TEST(Plan, TieBreakPrefersLeftOverRight)
{
  // Slow lead, both neighbours clear and symmetric: left and right cost the same.
  const auto w = world_of(vehicle(0, 0.0, 1, 25.0), {constant(vehicle(1, 34.5, 1, 15.0))});
  const auto left = autopilot::rollout_plan(w, Maneuver::kChangeLeft, config(), {});
  const auto right = autopilot::rollout_plan(w, Maneuver::kChangeRight, config(), {});
  ASSERT_EQ(left.cost, right.cost);
  EXPECT_EQ(autopilot::plan(w, config(), {}).maneuver, Maneuver::kChangeLeft);
}

TEST(Plan, CommitsToActiveManeuver)
{
  const auto spec = shadowpilot::testing::scenario_of(
    vehicle(0, 0.0, 0, 25.0), {constant(vehicle(1, 40.0, 0, 15.0))}, 8.0, 2);
  const auto params = sim::sim_params_for(spec);
  const auto cfg = config();
  auto w = sim::initial_world(spec);
  bool seen = false;
  for (sim::Tick k = 0; k < sim::tick_count(spec); ++k) {
    const auto decision = autopilot::plan(w, cfg, params);
    if (w.ego.in_maneuver()) {
      seen = true;
      EXPECT_EQ(decision.maneuver, autopilot::maneuver_for_direction(w.ego.maneuver_direction()));
      EXPECT_EQ(autopilot::to_control(decision, w.ego).lane_change_cmd, sim::LaneChangeCommand::kNone);
    }
    w = sim::step_world(w, autopilot::to_control(decision, w.ego), params);
  }
  EXPECT_TRUE(seen);
}

TEST(Plan, ArgminInvariantUnderCommonWeightScaling)
{
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 12; ++trial) {
    const auto spec = shadowpilot::testing::random_scenario(rng, 60);
    const auto params = sim::sim_params_for(spec);
    const auto base = *spec.autopilot;
    auto w = sim::initial_world(spec);
    for (int k = 0; k < 60; ++k) {
      const auto reference = autopilot::plan(w, base, params);
      for (const double scale : {0.25, 2.0, 8.0}) {
        auto scaled = base;
        scaled.w_v *= scale;
        scaled.w_lc *= scale;
        EXPECT_EQ(autopilot::plan(w, scaled, params).maneuver, reference.maneuver);
      }
      w = sim::step_world(w, autopilot::to_control(reference, w.ego), params);
    }
  }
}

TEST(Plan, ChosenRolloutRespectsMinGap)
{
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 10; ++trial) {
    const auto spec = shadowpilot::testing::random_scenario(rng, 80);
    const auto params = sim::sim_params_for(spec);
    const auto cfg = *spec.autopilot;
    auto w = sim::initial_world(spec);
    for (int k = 0; k < 80; ++k) {
      const auto decision = autopilot::plan(w, cfg, params);
      if (!decision.infeasible && !w.ego.in_maneuver()) {
        const auto chosen = autopilot::rollout_plan(w, decision.maneuver, cfg, params);
        ASSERT_TRUE(chosen.feasible());
        // Replay the chosen rollout and check every tick against the constraint.
        const int target = autopilot::target_lane(decision.maneuver, w.ego);
        auto r = w;
        for (std::size_t i = 0; i < chosen.trajectory.size(); ++i) {
          const double a = autopilot::follow_accel(r, cfg);
          sim::ControlInput c{a, i == 0 ? autopilot::to_command(decision.maneuver) : sim::LaneChangeCommand::kNone};
          r = sim::step_world(r, c, params);
          EXPECT_FALSE(r.collision);
          EXPECT_FALSE(autopilot::violates_min_gap(r, target, cfg.min_gap));
        }
      }
      w = sim::step_world(w, autopilot::to_control(decision, w.ego), params);
    }
  }
}

TEST(Plan, IsPure)
{
  std::mt19937_64 rng(4);
  const auto spec = shadowpilot::testing::random_scenario(rng, 10);
  const auto w = sim::initial_world(spec);
  const auto params = sim::sim_params_for(spec);
  EXPECT_EQ(autopilot::plan(w, *spec.autopilot, params), autopilot::plan(w, *spec.autopilot, params));
}

TEST(Driver, FirstSwitchTickIsReproducible)
{
  const auto spec = shadowpilot::testing::scenario_of(
    vehicle(0, 0.0, 0, 25.0), {constant(vehicle(1, 80.0, 0, 15.0))}, 10.0, 2);
  const auto first = autopilot::drive_scenario(spec, config());
  const auto second = autopilot::drive_scenario(spec, config());
  ASSERT_FALSE(first.lane_changes.empty());
  EXPECT_EQ(first.lane_changes, second.lane_changes);
}

TEST(MpcConfig, JsonRoundTripAndDefaults)
{
  auto cfg = config(27.5);
  cfg.w_lc = 3.0;
  cfg.idm.s0 = 2.5;
  EXPECT_EQ(autopilot::mpc_config_from_json(autopilot::to_json(cfg), "$"), cfg);
  EXPECT_EQ(autopilot::mpc_config_from_json(nlohmann::json::object(), "$"), autopilot::MpcConfig{});
  EXPECT_THROW(
    (void)autopilot::mpc_config_from_json(nlohmann::json{{"gain", 1}}, "$"), ContractViolation);
}

TEST(MpcConfig, ValidatesHorizonGrid)
{
  auto cfg = config();
  cfg.horizon = 5.05;
  EXPECT_THROW(cfg.validate(0.1), ContractViolation);
  cfg.horizon = 5.0;
  cfg.min_gap = 0.0;
  EXPECT_THROW(cfg.validate(0.1), ContractViolation);
}
