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

#ifndef SHADOWPILOT__SESSION__SERVER_HPP_
#define SHADOWPILOT__SESSION__SERVER_HPP_

#include "shadowpilot/session/session.hpp"

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>

namespace shadowpilot::session
{

struct ServerConfig
{
  std::string bind_address{"127.0.0.1:8080"};  // host:port, port 0 picks a free one
  std::optional<std::filesystem::path> scenario_dir;
  std::optional<std::filesystem::path> suite_path;
  std::filesystem::path trace_dir{"traces"};
  std::optional<std::filesystem::path> static_dir;
  bool pacing{true};  // false: ticks run back to back, for tests and batch playback
  int threads{1};
  AutopilotOverrides overrides;
};

/// WebSocket session host. Each connection owns one independent session; the wire
/// protocol is JSON text frames. Plain HTTP GETs are answered from static_dir.
///
/// Traces are written to <trace_dir>/<trace_id>.jsonl when a scenario ends or the
/// client disconnects; quiz answers accumulate in <trace_dir>/responses.json.
class Server
{
public:
  /// Loads every scenario file and the suite up front. Throws ParseError on bad files.
  explicit Server(ServerConfig config);
  ~Server();
  Server(const Server &) = delete;
  Server & operator=(const Server &) = delete;

  /// Binds and starts accepting. Returns the bound port.
  std::uint16_t start();
  /// Serves until stop() or, with handle_signals, SIGINT/SIGTERM.
  void run(bool handle_signals = false);
  /// Thread safe.
  void stop();

  [[nodiscard]] std::uint16_t port() const;
  [[nodiscard]] std::filesystem::path responses_path() const;

private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

}  // namespace shadowpilot::session

#endif  // SHADOWPILOT__SESSION__SERVER_HPP_
