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

// Command-line front end: headless runs, the session server, suite generation,
// evaluation and trace replay.

#include "shadowpilot/errors.hpp"
#include "shadowpilot/harness/harness_io.hpp"
#include "shadowpilot/harness/suite.hpp"
#include "shadowpilot/session/headless.hpp"
#include "shadowpilot/session/server.hpp"
#include "shadowpilot/sim/scenario_io.hpp"

#include <CLI11.hpp>
#include <spdlog/cfg/env.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <iostream>

namespace sp = shadowpilot;
namespace session = shadowpilot::session;

namespace
{

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

void add_overrides(CLI::App * cmd, session::AutopilotOverrides & o)
{
  cmd->add_option("--horizon", o.horizon, "Planning horizon [s]");
  cmd->add_option("--v-des", o.v_des, "Desired speed [m/s]");
  cmd->add_option("--w-v", o.w_v, "Speed tracking weight");
  cmd->add_option("--w-lc", o.w_lc, "Lane change penalty");
  cmd->add_option("--min-gap", o.min_gap, "Minimum target-lane gap [m]");
}

void emit(const std::string & out, const std::string & text)
{
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    session::write_text_file(out, text);
  }
}

struct SimulateArgs
{
  std::string scenario;
  std::string mode{"manual_preview"};
  std::string control_log;
  std::string out;
  bool no_delegate{false};
  session::AutopilotOverrides overrides;
};

int simulate(const SimulateArgs & args)
{
  const auto mode = session::session_mode_from_string(args.mode);
  if (!mode) {
    throw sp::UsageError("--mode must be manual_preview, autopilot_observe or quiz");
  }
  if (*mode == session::SessionMode::kQuiz) {
    throw sp::UsageError("quiz sessions run under serve; use autopilot_observe to render a suite scenario");
  }
  const auto spec = sp::sim::load_scenario(args.scenario);
  auto cfg = session::make_session_config(*mode, spec);
  cfg.autopilot = args.overrides.apply(cfg.autopilot);
  cfg.attach_delegate = !args.no_delegate;

  std::optional<std::vector<sp::sim::ControlInput>> controls;
  if (!args.control_log.empty()) {
    const auto entries = session::load_control_log(args.control_log);
    controls = session::expand_control_log(entries, sp::sim::tick_count(spec));
  }
  const auto records = session::run_headless(cfg, controls);
  emit(args.out, session::serialize_trace(cfg, records));
  spdlog::info("simulated {} ticks", records.size());
  return 0;
}

int replay(const std::string & trace)
{
  const auto outcome = session::replay_trace_file(trace);
  if (outcome.identical) {
    std::cout << "replay identical: " << outcome.records << " records\n";
    return 0;
  }
  std::cout << "replay MISMATCH: " << outcome.detail << "\n";
  return kExitMismatch;
}

int suite(const std::uint64_t seed, const int n, const std::string & out)
{
  const auto scenarios = sp::harness::generate_test_suite(seed, n);
  emit(out, sp::harness::suite_to_json(seed, scenarios).dump(2) + "\n");
  for (const auto & s : scenarios) {
    spdlog::info("{}: lane change at {:.1f} s", s.id, s.ground_truth_t);
  }
  return 0;
}

int evaluate(const std::string & responses, const std::string & suite_path, const std::string & out)
{
  const auto files = session::evaluate_files(responses, suite_path, out);
  std::cout << sp::harness::format_report_table(files.report);
  spdlog::info("wrote {} and {}", files.json.string(), files.table.string());
  return 0;
}

int serve(session::ServerConfig cfg)
{
  session::Server server(std::move(cfg));
  const auto port = server.start();
  std::cout << "listening on port " << port << std::endl;
  server.run(true);
  return 0;
}

}  // namespace

int main(int argc, char ** argv)
{
  spdlog::set_default_logger(spdlog::stderr_color_mt("shadowpilot"));
  spdlog::set_level(spdlog::level::warn);
  spdlog::cfg::load_env_levels();

  CLI::App app{"Lane-change autopilot simulator with a shadow preview delegate"};
  app.require_subcommand(1);

  SimulateArgs sim_args;
  auto * sim_cmd = app.add_subcommand("simulate", "Run a scenario headless and write its trace");
  sim_cmd->add_option("--scenario", sim_args.scenario, "Scenario JSON file")->required()->check(CLI::ExistingFile);
  sim_cmd->add_option("--mode", sim_args.mode, "manual_preview or autopilot_observe")->capture_default_str();
  sim_cmd->add_option("--control-log", sim_args.control_log, "Line-delimited control log")->check(CLI::ExistingFile);
  sim_cmd->add_option("--out", sim_args.out, "Trace output path (default stdout)");
  sim_cmd->add_flag("--no-delegate", sim_args.no_delegate, "Run without the preview delegate");
  add_overrides(sim_cmd, sim_args.overrides);

  session::ServerConfig server_cfg;
  std::string scenario_dir;
  std::string suite_path;
  std::string static_dir;
  std::string trace_dir = server_cfg.trace_dir.string();
  bool no_pacing = false;
  auto * serve_cmd = app.add_subcommand("serve", "Host live sessions over WebSocket");
  serve_cmd->add_option("--bind", server_cfg.bind_address, "host:port")->capture_default_str();
  serve_cmd->add_option("--scenario-dir", scenario_dir, "Directory of scenario JSON files")->check(CLI::ExistingDirectory);
  serve_cmd->add_option("--suite", suite_path, "Suite file for quiz sessions")->check(CLI::ExistingFile);
  serve_cmd->add_option("--trace-dir", trace_dir, "Where traces and responses.json go")->capture_default_str();
  serve_cmd->add_option("--static-dir", static_dir, "Static files served over plain HTTP")->check(CLI::ExistingDirectory);
  serve_cmd->add_flag("--no-pacing", no_pacing, "Run ticks back to back instead of at tick_rate");
  serve_cmd->add_option("--threads", server_cfg.threads, "I/O threads")->capture_default_str()->check(CLI::PositiveNumber);
  add_overrides(serve_cmd, server_cfg.overrides);

  std::uint64_t seed = 1;
  int n = 8;
  std::string suite_out;
  auto * suite_cmd = app.add_subcommand("suite", "Generate the timing-quiz test suite");
  suite_cmd->add_option("--seed", seed, "Suite seed")->capture_default_str();
  suite_cmd->add_option("--n", n, "Number of scenarios")->capture_default_str()->check(CLI::PositiveNumber);
  suite_cmd->add_option("--out", suite_out, "Output path (default stdout)");

  std::string responses;
  std::string eval_suite;
  std::string eval_out;
  auto * eval_cmd = app.add_subcommand("eval", "Score quiz responses against a suite");
  eval_cmd->add_option("--responses", responses, "Responses JSON file")->required();
  eval_cmd->add_option("--suite", eval_suite, "Suite JSON file")->required();
  eval_cmd->add_option("--out", eval_out, "Report path; writes <out>.json and <out>.txt")->required();

  std::string trace;
  auto * replay_cmd = app.add_subcommand("replay", "Re-run a trace and check it is byte-identical");
  replay_cmd->add_option("--trace", trace, "Trace file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp & e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp & e) {
    return app.exit(e);
  } catch (const CLI::ParseError & e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*sim_cmd) {
      return simulate(sim_args);
    }
    if (*serve_cmd) {
      if (!scenario_dir.empty()) server_cfg.scenario_dir = scenario_dir;
      if (!suite_path.empty()) server_cfg.suite_path = suite_path;
      if (!static_dir.empty()) server_cfg.static_dir = static_dir;
      server_cfg.trace_dir = trace_dir;
      server_cfg.pacing = !no_pacing;
      return serve(std::move(server_cfg));
    }
    if (*suite_cmd) {
      return suite(seed, n, suite_out);
    }
    if (*eval_cmd) {
      return evaluate(responses, eval_suite, eval_out);
    }
    if (*replay_cmd) {
      return replay(trace);
    }
  } catch (const sp::UsageError & e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const sp::ParseError & e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const sp::IngestionError & e) {
    std::cerr << "ingestion error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception & e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}
