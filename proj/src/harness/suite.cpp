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

#include "shadowpilot/harness/suite.hpp"

#include "shadowpilot/autopilot/driver.hpp"
#include "shadowpilot/errors.hpp"

#include <cmath>
#include <cstdio>
#include <random>

namespace shadowpilot::harness
{
namespace
{

// Portable uniform draws on top of mt19937_64 (the std distributions are
// implementation-defined, which would make suites differ across standard libraries).
class Sampler
{
public:
  explicit Sampler(const std::uint64_t seed) : engine_(seed) {}

  double uniform(const double lo, const double hi)
  {
    const double unit = static_cast<double>(engine_() >> 11U) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }

  /// Uniform on [lo, hi] snapped to a 0.1 grid.
  double uniform_tenths(const double lo, const double hi)
  {
    return std::round(uniform(lo, hi) * 10.0) / 10.0;
  }

  int integer(const int lo, const int hi)
  {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }

  bool chance(const double p) { return uniform(0.0, 1.0) < p; }

private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x)
{
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27U)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31U);
}

sim::TrafficVehicle make_traffic(
  const sim::VehicleId id, const int lane, const double s, const double v,
  const sim::TrafficBehavior behavior)
{
  sim::TrafficVehicle t;
  t.state.id = id;
  t.state.lane = lane;
  t.state.s = s;
  t.state.v = v;
  t.behavior = behavior;
  t.desired_speed = v;
  return t;
}

}  // namespace

std::uint64_t candidate_seed(const std::uint64_t suite_seed, const std::uint64_t index)
{
  return splitmix64(splitmix64(suite_seed) ^ (index + 1U));
}

autopilot::MpcConfig autopilot_of(const sim::ScenarioSpec & spec)
{
  return spec.autopilot.value_or(autopilot::MpcConfig{});
}

sim::ScenarioSpec sample_candidate(const std::uint64_t seed)
{
  Sampler rng(seed);

  sim::ScenarioSpec spec;
  spec.seed = seed;
  spec.duration = kTestScenarioDuration;
  spec.dt = sim::kDefaultDt;
  spec.lanes.lane_count = rng.integer(2, 4);
  spec.lanes.lane_width = sim::kDefaultLaneWidth;
  spec.lanes.road_length = 2000.0;

  autopilot::MpcConfig cfg;
  cfg.v_des = rng.uniform_tenths(26.0, 31.0);
  spec.autopilot = cfg;

  auto & ego = spec.ego_init;
  ego.id = 0;
  ego.lane = rng.integer(0, spec.lanes.lane_count - 1);
  ego.s = 200.0;
  ego.v = rng.uniform_tenths(cfg.v_des - 4.0, cfg.v_des);

  sim::VehicleId next_id = 1;

  // Slow lead in the ego lane: the reason to switch.
  const double lead_gap = rng.uniform_tenths(25.0, 90.0);
  const double lead_v = rng.uniform_tenths(12.0, ego.v - 4.0);
  spec.traffic_init.push_back(make_traffic(
    next_id++, ego.lane, ego.s + sim::kDefaultVehicleLength + lead_gap, lead_v,
    sim::TrafficBehavior::kConstantAccel));

  // Adjacent-lane traffic decides when a switch becomes possible.
  for (const int direction : {1, -1}) {
    const int lane = ego.lane + direction;
    if (!spec.lanes.has_lane(lane)) {
      continue;
    }
    const int count = rng.integer(0, 2);
    double cursor = ego.s + rng.uniform_tenths(-45.0, 10.0);
    for (int k = 0; k < count; ++k) {
      const double v = rng.uniform_tenths(ego.v - 6.0, ego.v + 6.0);
      const auto behavior =
        rng.chance(0.3) ? sim::TrafficBehavior::kFollowIdm : sim::TrafficBehavior::kConstantAccel;
      spec.traffic_init.push_back(make_traffic(next_id++, lane, cursor, std::max(0.0, v), behavior));
      cursor += rng.uniform_tenths(12.0, 40.0);
    }
  }

  // Occasional far vehicles in other lanes for texture.
  if (spec.lanes.lane_count > 2 && rng.chance(0.5)) {
    const int lane = rng.integer(0, spec.lanes.lane_count - 1);
    if (std::abs(lane - ego.lane) > 1) {
      spec.traffic_init.push_back(make_traffic(
        next_id++, lane, ego.s + rng.uniform_tenths(-30.0, 60.0),
        rng.uniform_tenths(18.0, 30.0), sim::TrafficBehavior::kConstantAccel));
    }
  }
  return spec;
}

std::optional<sim::Tick> single_switch_tick(const sim::ScenarioSpec & spec)
{
  const auto run = autopilot::drive_scenario(spec, autopilot_of(spec));
  if (run.first_collision || run.lane_changes.size() != 1) {
    return std::nullopt;
  }
  const auto tick = run.lane_changes.front().tick;
  const double t = static_cast<double>(tick) * spec.dt;
  if (t > kSwitchWindowOpen + 1e-9 && t < kSwitchWindowClose - 1e-9) {
    return tick;
  }
  return std::nullopt;
}

std::vector<TestScenario> generate_test_suite(const std::uint64_t seed, const int n)
{
  if (n < 1) {
    throw ContractViolation("generate_test_suite: n must be at least 1");
  }

  std::vector<TestScenario> suite;
  suite.reserve(static_cast<std::size_t>(n));
  std::uint64_t index = 0;
  int rejected_in_a_row = 0;
  while (static_cast<int>(suite.size()) < n) {
    const auto spec = sample_candidate(candidate_seed(seed, index++));
    const auto tick = single_switch_tick(spec);
    if (!tick) {
      if (++rejected_in_a_row >= kMaxConsecutiveRejections) {
        throw GenerationFailure(
          "generate_test_suite: " + std::to_string(kMaxConsecutiveRejections) +
          " consecutive candidates rejected");
      }
      continue;
    }
    rejected_in_a_row = 0;

    TestScenario scenario;
    char id[32];
    std::snprintf(id, sizeof(id), "scenario-%02zu", suite.size() + 1);
    scenario.id = id;
    scenario.spec = spec;
    scenario.ground_truth_tick = *tick;
    scenario.ground_truth_t = static_cast<double>(*tick) * spec.dt;
    suite.push_back(std::move(scenario));
  }
  return suite;
}

}  // namespace shadowpilot::harness
