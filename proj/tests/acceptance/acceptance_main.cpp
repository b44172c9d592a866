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

// Acceptance checks for the headless core. One PASS/FAIL line per criterion; the
// exit status is nonzero when any criterion fails.

#include "shadowpilot/autopilot/driver.hpp"
#include "shadowpilot/harness/metrics.hpp"
#include "shadowpilot/harness/statistics.hpp"
#include "shadowpilot/harness/suite.hpp"
#include "shadowpilot/prediction/future_prediction.hpp"
#include "shadowpilot/session/headless.hpp"
#include "shadowpilot/session/trace.hpp"
#include "shadowpilot/sim/vehicle.hpp"
#include "shadowpilot/sim/world.hpp"

#include "test_support.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace shadowpilot;
namespace t = shadowpilot::testing;

namespace
{

struct Outcome
{
  bool pass{true};
  std::string detail;

  void require(bool ok, const std::string & what)
  {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

constexpr sim::Tick kReplayTicks = 300;
constexpr int kReplayScenarios = 20;

struct RandomCase
{
  sim::ScenarioSpec spec;
  std::vector<sim::ControlInput> controls;
};

std::vector<RandomCase> random_cases()
{
  std::mt19937_64 rng(20260101);
  std::vector<RandomCase> out;
  for (int i = 0; i < kReplayScenarios; ++i) {
    auto spec = t::random_scenario(rng, kReplayTicks);
    auto controls = t::random_controls(rng, kReplayTicks);
    out.push_back({std::move(spec), std::move(controls)});
  }
  return out;
}

Outcome determinism_replay(const std::vector<RandomCase> & cases)
{
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "shadowpilot-acceptance";
  std::filesystem::create_directories(dir);
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto cfg = session::make_session_config(session::SessionMode::kManualPreview, cases[i].spec);
    const auto records = session::run_headless(cfg, cases[i].controls);
    const auto path = dir / ("replay-" + std::to_string(i) + ".jsonl");
    session::write_text_file(path, session::serialize_trace(cfg, records));
    const auto outcome = session::replay_trace_file(path);
    o.require(records.size() == static_cast<std::size_t>(kReplayTicks), "case " + std::to_string(i) + ": wrong record count");
    o.require(outcome.identical, "case " + std::to_string(i) + ": " + outcome.detail);
  }
  const double seconds =
    std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(seconds < 10.0, "took " + std::to_string(seconds) + " s");
  if (o.pass) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%d scenarios x %lld ticks in %.2f s", kReplayScenarios,
                  static_cast<long long>(kReplayTicks), seconds);
    o.detail = buf;
  }
  return o;
}

Outcome no_actuation(const std::vector<RandomCase> & cases)
{
  Outcome o;
  int events = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    for (const auto mode : {session::SessionMode::kManualPreview, session::SessionMode::kAutopilotObserve}) {
      auto with = session::make_session_config(mode, cases[i].spec);
      with.attach_delegate = true;
      auto without = with;
      without.attach_delegate = false;
      const auto controls = mode == session::SessionMode::kManualPreview
                              ? std::optional<std::vector<sim::ControlInput>>(cases[i].controls)
                              : std::nullopt;
      const auto a = session::run_headless(with, controls);
      const auto b = session::run_headless(without, controls);
      for (const auto & r : a) {
        events += r.preview_event ? 1 : 0;
      }
      o.require(t::world_rows(a) == t::world_rows(b),
                "case " + std::to_string(i) + " mode " + std::string(session::to_string(mode)));
    }
  }
  o.require(events > 0, "delegate never emitted");
  if (o.pass) {
    o.detail = std::to_string(events) + " preview events, world fields identical";
  }
  return o;
}

Outcome preview_equals_execution()
{
  Outcome o;
  const auto suite = harness::generate_test_suite(1, 50);
  std::size_t matched = 0;
  for (const auto & s : suite) {
    const auto cfg = session::make_session_config(session::SessionMode::kAutopilotObserve, s.spec);
    const auto records = session::run_headless(cfg);
    std::vector<std::pair<sim::Tick, autopilot::Maneuver>> previewed;
    std::vector<std::pair<sim::Tick, autopilot::Maneuver>> executed;
    for (const auto & r : records) {
      if (r.preview_event) {
        const auto & e = r.preview_event->event;
        if (e.trigger != delegate::PreviewTrigger::kSeverityEscalation &&
            autopilot::is_lane_change(e.proposed_maneuver))
        {
          previewed.emplace_back(e.tick, e.proposed_maneuver);
        }
      }
      if (r.executed_maneuver_start) {
        executed.emplace_back(r.tick, *r.executed_maneuver_start);
      }
    }
    o.require(!executed.empty(), s.id + ": no lane change executed");
    o.require(previewed == executed, s.id + ": preview ticks differ from execution ticks");
    matched += executed.size();
  }
  if (o.pass) {
    o.detail = std::to_string(suite.size()) + " scenarios, " + std::to_string(matched) + " maneuver starts matched";
  }
  return o;
}

sim::WorldState closing_gap_world()
{
  return t::world_of(t::vehicle(0, 0.0, 0, 30.0), {t::constant(t::vehicle(1, 25.0, 0, 20.0))});
}

Outcome predictor_oracle()
{
  Outcome o;
  std::mt19937_64 rng(200);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const prediction::PredictionConfig cfg;
  const sim::SimParams params;
  int collisions = 0;
  for (int i = 0; i < 200; ++i) {
    const double a_ego = -2.0 + 4.0 * u(rng);
    const int lane = static_cast<int>(u(rng) * 3.0);
    auto w = t::world_of(
      t::vehicle(0, 100.0, lane, 10.0 + 20.0 * u(rng), a_ego),
      {t::constant(t::vehicle(1, 105.0 + 60.0 * u(rng), lane, 25.0 * u(rng), -1.0 + 2.0 * u(rng))),
       t::constant(t::vehicle(2, 80.0 + 40.0 * u(rng), (lane + 1) % 3, 30.0 * u(rng), -1.0 + 2.0 * u(rng))),
       t::constant(t::vehicle(3, 40.0 + 40.0 * u(rng), lane, 20.0 + 15.0 * u(rng), 2.0 * u(rng)))});
    const double pick = u(rng);
    const auto m = pick < 0.4   ? autopilot::Maneuver::kKeepLane
                   : pick < 0.7 ? autopilot::Maneuver::kChangeLeft
                                : autopilot::Maneuver::kChangeRight;
    const auto command = sim::can_begin_lane_change(w.ego, autopilot::to_command(m), w.lanes)
                           ? m
                           : autopilot::Maneuver::kKeepLane;
    const auto predicted =
      prediction::estimate_collision(prediction::predict_future(w, {command, a_ego}, cfg), cfg);
    std::optional<int> truth;
    for (int k = 1; k <= cfg.steps() && !truth; ++k) {
      w = sim::step_world(
        w, {a_ego, k == 1 ? autopilot::to_command(command) : sim::LaneChangeCommand::kNone}, params);
      if (w.collision) {
        truth = k;
      }
    }
    o.require(predicted.has_value() == truth.has_value(), "case " + std::to_string(i) + ": collision disagreement");
    if (predicted && truth) {
      ++collisions;
      o.require(predicted->steps == *truth, "case " + std::to_string(i) + ": ttc off grid truth");
      o.require(predicted->ttc == static_cast<double>(*truth) * cfg.dt ||
                  std::abs(predicted->ttc - *truth * cfg.dt) < 1e-12,
                "case " + std::to_string(i) + ": ttc not steps * dt");
    }
  }
  const auto fixture = prediction::estimate_collision(
    prediction::predict_future(closing_gap_world(), {}, cfg), cfg);
  o.require(fixture && fixture->steps == 21 && std::abs(fixture->ttc - 2.1) < 1e-12, "closing-gap fixture");
  if (o.pass) {
    o.detail = "200 cases (" + std::to_string(collisions) + " collisions) agree; fixture ttc 2.1 s";
  }
  return o;
}

Outcome mpc_ground_truth()
{
  Outcome o;
  const auto suite = harness::generate_test_suite(1, 8);
  o.require(suite.size() == 8, "suite size");
  std::ostringstream times;
  for (const auto & s : suite) {
    o.require(s.spec.duration == 5.0, s.id + ": duration");
    o.require(s.ground_truth_t > 0.5 && s.ground_truth_t < 4.5, s.id + ": ground truth outside (0.5, 4.5)");
    const auto run = autopilot::drive_scenario(s.spec, harness::autopilot_of(s.spec));
    o.require(run.lane_changes.size() == 1, s.id + ": not exactly one lane change");
    if (run.lane_changes.size() == 1) {
      const double t_rerun = static_cast<double>(run.lane_changes[0].tick) * s.spec.dt;
      o.require(t_rerun == s.ground_truth_t, s.id + ": rerun disagrees");
    }
    times << " " << s.ground_truth_t;
  }
  o.require(harness::generate_test_suite(1, 8) == suite, "regeneration differs");
  if (o.pass) {
    o.detail = "ground truth [s]:" + times.str();
  }
  return o;
}

Outcome statistics_vs_summaries()
{
  Outcome o;
  const harness::GroupSummary treatment{0.67, 0.27, 5};
  const harness::GroupSummary comparison{1.09, 0.35, 5};
  const auto tt = harness::student_t(comparison, treatment);
  const auto es = harness::effect_sizes(comparison, treatment);
  o.require(std::abs(es.cohens_d - 1.34) <= 0.01, "d = " + std::to_string(es.cohens_d));
  o.require(std::abs(tt.t - 2.12) <= 0.01, "t = " + std::to_string(tt.t));
  o.require(tt.df == 8, "df = " + std::to_string(tt.df));
  o.require(std::abs(es.correction - 0.9032) <= 0.0001, "J = " + std::to_string(es.correction));
  o.require(std::abs(es.hedges_g - es.correction * es.cohens_d) < 1e-12, "g != J d");
  if (o.pass) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "d=%.4f t=%.4f df=%d p2=%.4f J=%.4f g=%.4f", es.cohens_d, tt.t, tt.df,
                  tt.p_two_tailed, es.correction, es.hedges_g);
    o.detail = buf;
  }
  return o;
}

Outcome mann_whitney_exactness()
{
  Outcome o;
  // Fixture pool with ties inside and across groups.
  const std::vector<double> pool_a{1.0, 2.0, 2.0, 3.5, 5.0, 7.0, 7.0};
  const std::vector<double> pool_b{2.0, 3.5, 4.0, 6.0, 7.0, 8.0, 0.5};
  int pairs = 0;
  for (std::size_t n1 = 1; n1 <= 7; ++n1) {
    for (std::size_t n2 = 1; n1 + n2 <= 8; ++n2) {
      for (std::size_t offset = 0; offset + n1 <= pool_a.size(); ++offset) {
        const std::span<const double> a(pool_a.data() + offset, n1);
        const std::span<const double> b(pool_b.data() + (pool_b.size() - n2), n2);
        const auto r = harness::mann_whitney_u(a, b);
        const auto brute = t::brute_mann_whitney(a, b);
        const std::string tag = "n1=" + std::to_string(n1) + " n2=" + std::to_string(n2);
        o.require(r.exact, tag + ": not exact");
        o.require(r.u_a == brute.u_a, tag + ": U");
        o.require(std::abs(r.p_upper - brute.p_upper) < 1e-12, tag + ": p_upper");
        o.require(std::abs(r.p_lower - brute.p_lower) < 1e-12, tag + ": p_lower");
        o.require(r.p_one_tailed == std::min(r.p_upper, r.p_lower), tag + ": one-tailed p");
        ++pairs;
      }
    }
  }
  std::mt19937_64 rng(1000);
  std::uniform_int_distribution<int> size(1, 15);
  std::uniform_int_distribution<int> value(0, 9);
  for (int i = 0; i < 1000; ++i) {
    std::vector<double> a(static_cast<std::size_t>(size(rng)));
    std::vector<double> b(static_cast<std::size_t>(size(rng)));
    for (auto & x : a) x = value(rng);
    for (auto & x : b) x = value(rng);
    const auto r = harness::mann_whitney_u(a, b);
    o.require(r.u_a + r.u_b == static_cast<double>(a.size() * b.size()), "U_A + U_B case " + std::to_string(i));
  }
  const std::vector<double> high{6, 7, 8, 9, 10};
  const std::vector<double> low{1, 2, 3, 4, 5};
  const auto separated = harness::mann_whitney_u(high, low);
  o.require(separated.u_a == 25.0, "separated U");
  o.require(std::abs(separated.p_one_tailed - 1.0 / 252.0) < 1e-15, "separated p");
  if (o.pass) {
    o.detail = std::to_string(pairs) + " fixture pairs match enumeration; 1000 U sums; p = 1/252";
  }
  return o;
}

Outcome metric_properties()
{
  Outcome o;
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> time(0.0, 5.0);
  std::uniform_real_distribution<double> conf(0.0, 1.0);
  std::uniform_real_distribution<double> scale(0.01, 100.0);
  std::uniform_int_distribution<int> size(1, 12);
  for (int i = 0; i < 1000; ++i) {
    const auto n = static_cast<std::size_t>(size(rng));
    std::vector<double> truths(n);
    std::vector<double> preds(n);
    std::vector<double> c(n);
    for (std::size_t k = 0; k < n; ++k) {
      truths[k] = time(rng);
      preds[k] = time(rng);
      c[k] = conf(rng);
    }
    const double base = harness::weighted_l1(preds, c, truths);
    o.require(base >= 0.0, "negative score case " + std::to_string(i));
    o.require(harness::weighted_l1(truths, c, truths) == 0.0, "perfect nonzero case " + std::to_string(i));
    const double k = scale(rng);
    auto scaled = c;
    for (auto & x : scaled) x *= k;
    const double rescaled = harness::weighted_l1(preds, scaled, truths);
    o.require(std::abs(rescaled - base) <= 1e-12 * std::max(1.0, base), "scale case " + std::to_string(i));
  }
  const std::vector<double> truths{2.0, 3.0};
  const std::vector<double> preds{2.5, 2.0};
  const std::vector<double> c{1.0, 0.5};
  const double fixture = harness::weighted_l1(preds, c, truths);
  o.require(std::abs(fixture - 2.0 / 3.0) <= 1e-9, "fixture = " + std::to_string(fixture));
  if (o.pass) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "1000 random cases; fixture %.10f", fixture);
    o.detail = buf;
  }
  return o;
}

}  // namespace

int main()
{
  const auto cases = random_cases();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
    {"determinism-replay", [&] { return determinism_replay(cases); }},
    {"no-actuation", [&] { return no_actuation(cases); }},
    {"preview-equals-execution", preview_equals_execution},
    {"predictor-oracle", predictor_oracle},
    {"mpc-ground-truth", mpc_ground_truth},
    {"statistics-summaries", statistics_vs_summaries},
    {"mann-whitney-exactness", mann_whitney_exactness},
    {"metric-properties", metric_properties},
  };
  int failures = 0;
  for (const auto & [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception & e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
