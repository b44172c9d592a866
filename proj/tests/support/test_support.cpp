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

#include "test_support.hpp"

#include <algorithm>

namespace shadowpilot::testing
{

sim::VehicleState vehicle(
  const sim::VehicleId id, const double s, const int lane, const double v, const double a_lon)
{
  sim::VehicleState st;
  st.id = id;
  st.s = s;
  st.lane = lane;
  st.v = v;
  st.a_lon = a_lon;
  return st;
}

sim::TrafficVehicle constant(sim::VehicleState state)
{
  const double v = state.v;
  return {std::move(state), sim::TrafficBehavior::kConstantAccel, v};
}

sim::TrafficVehicle idm_follower(sim::VehicleState state, const double desired_speed)
{
  return {std::move(state), sim::TrafficBehavior::kFollowIdm, desired_speed};
}

sim::WorldState world_of(
  const sim::VehicleState & ego, std::vector<sim::TrafficVehicle> traffic, const int lane_count,
  const double road_length)
{
  sim::WorldState w;
  w.ego = ego;
  w.traffic = std::move(traffic);
  std::sort(w.traffic.begin(), w.traffic.end(), [](const auto & x, const auto & y) {
    return x.state.id < y.state.id;
  });
  w.lanes.lane_count = lane_count;
  w.lanes.road_length = road_length;
  return w;
}

sim::ScenarioSpec scenario_of(
  const sim::VehicleState & ego, std::vector<sim::TrafficVehicle> traffic, const double duration,
  const int lane_count, const std::uint64_t seed)
{
  sim::ScenarioSpec spec;
  spec.seed = seed;
  spec.duration = duration;
  spec.lanes.lane_count = lane_count;
  spec.lanes.road_length = 5000.0;
  spec.ego_init = ego;
  spec.traffic_init = std::move(traffic);
  return spec;
}

sim::ScenarioSpec random_scenario(std::mt19937_64 & rng, const sim::Tick ticks)
{
  std::uniform_int_distribution<int> lanes_d(2, 4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto lanes = lanes_d(rng);

  sim::ScenarioSpec spec;
  spec.seed = rng();
  spec.duration = static_cast<double>(ticks) * spec.dt;
  spec.lanes.lane_count = lanes;
  spec.lanes.road_length = 20000.0;
  const int ego_lane = std::uniform_int_distribution<int>(0, lanes - 1)(rng);
  spec.ego_init = vehicle(0, 500.0, ego_lane, 18.0 + 12.0 * u(rng));

  autopilot::MpcConfig mpc;
  mpc.v_des = 24.0 + 8.0 * u(rng);
  spec.autopilot = mpc;

  const int count = std::uniform_int_distribution<int>(2, 8)(rng);
  for (int i = 1; i <= count; ++i) {
    const int lane = std::uniform_int_distribution<int>(0, lanes - 1)(rng);
    double s = 500.0 + (u(rng) < 0.75 ? 1.0 : -1.0) * (15.0 + 200.0 * u(rng));
    const double v = 8.0 + 22.0 * u(rng);
    auto st = vehicle(i, s, lane, v);
    if (u(rng) < 0.35) {
      spec.traffic_init.push_back(idm_follower(st, v + 5.0 * u(rng)));
    } else {
      st.a_lon = -0.6 + 1.0 * u(rng);
      spec.traffic_init.push_back(constant(st));
    }
  }
  return spec;
}

std::vector<sim::ControlInput> random_controls(std::mt19937_64 & rng, const sim::Tick ticks)
{
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<sim::ControlInput> out(static_cast<std::size_t>(ticks));
  double a = 0.0;
  for (auto & c : out) {
    if (u(rng) < 0.08) {
      a = -10.0 + 13.0 * u(rng);
    }
    c.a_lon_cmd = a;
    const double r = u(rng);
    c.lane_change_cmd = r < 0.02   ? sim::LaneChangeCommand::kLeft
                        : r < 0.04 ? sim::LaneChangeCommand::kRight
                                   : sim::LaneChangeCommand::kNone;
  }
  return out;
}

std::vector<WorldRow> world_rows(const std::span<const session::TraceRecord> records)
{
  std::vector<WorldRow> rows;
  rows.reserve(records.size());
  for (const auto & r : records) {
    rows.push_back({r.tick, r.time, r.ego, r.traffic, r.control, r.collision});
  }
  return rows;
}

BruteMannWhitney brute_mann_whitney(const std::span<const double> a, const std::span<const double> b)
{
  const auto u_of = [](const std::vector<double> & x, const std::vector<double> & y) {
    double u = 0.0;
    for (const double xi : x) {
      for (const double yj : y) {
        u += xi > yj ? 1.0 : (xi == yj ? 0.5 : 0.0);
      }
    }
    return u;
  };
  std::vector<double> pooled(a.begin(), a.end());
  pooled.insert(pooled.end(), b.begin(), b.end());
  const double observed =
    u_of(std::vector<double>(a.begin(), a.end()), std::vector<double>(b.begin(), b.end()));

  // labels[i] = 1 puts pooled[i] in group A; next_permutation walks every split once.
  std::vector<int> labels(pooled.size(), 0);
  std::fill(labels.end() - static_cast<std::ptrdiff_t>(a.size()), labels.end(), 1);
  double total = 0.0;
  double upper = 0.0;
  double lower = 0.0;
  do {
    std::vector<double> x;
    std::vector<double> y;
    for (std::size_t i = 0; i < pooled.size(); ++i) {
      (labels[i] ? x : y).push_back(pooled[i]);
    }
    const double u = u_of(x, y);
    total += 1.0;
    upper += u >= observed ? 1.0 : 0.0;
    lower += u <= observed ? 1.0 : 0.0;
  } while (std::next_permutation(labels.begin(), labels.end()));
  return {observed, upper / total, lower / total};
}

}  // namespace shadowpilot::testing
