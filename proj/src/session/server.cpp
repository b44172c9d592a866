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

#include "shadowpilot/session/server.hpp"

#include "shadowpilot/errors.hpp"
#include "shadowpilot/harness/harness_io.hpp"
#include "shadowpilot/json_util.hpp"
#include "shadowpilot/session/trace.hpp"
#include "shadowpilot/sim/scenario_io.hpp"

#include <boost/asio/ip/tcp.hpp>
#include <boost/asio/signal_set.hpp>
#include <boost/asio/steady_timer.hpp>
#include <boost/asio/strand.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/websocket.hpp>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <deque>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

namespace shadowpilot::session
{

namespace net = boost::asio;
namespace beast = boost::beast;
namespace http = beast::http;
namespace websocket = beast::websocket;
using tcp = net::ip::tcp;
using nlohmann::json;

namespace
{

struct ScenarioEntry
{
  sim::ScenarioSpec spec;
  bool from_suite{false};
};

/// Quiz answers from every session, persisted after each submission.
class ResponseStore
{
public:
  explicit ResponseStore(std::filesystem::path path) : path_(std::move(path)) {}

  void record(
    const std::string & participant, const harness::Condition condition,
    const harness::ScenarioAnswer & answer)
  {
    std::lock_guard lock(mutex_);
    auto it = std::find_if(responses_.begin(), responses_.end(), [&](const auto & r) {
      return r.participant_id == participant;
    });
    if (it == responses_.end()) {
      responses_.push_back({participant, condition, {}});
      it = std::prev(responses_.end());
    }
    it->condition = condition;
    auto & answers = it->answers;
    const auto a = std::find_if(answers.begin(), answers.end(), [&](const auto & x) {
      return x.scenario_id == answer.scenario_id;
    });
    if (a == answers.end()) {
      answers.push_back(answer);
    } else {
      *a = answer;
    }
    const auto tmp = std::filesystem::path(path_.string() + ".tmp");
    write_text_file(tmp, harness::responses_to_json(responses_).dump(2) + "\n");
    std::filesystem::rename(tmp, path_);
  }

  [[nodiscard]] const std::filesystem::path & path() const { return path_; }

private:
  std::filesystem::path path_;
  std::mutex mutex_;
  std::vector<harness::ParticipantResponse> responses_;
};

struct Shared
{
  ServerConfig config;
  std::map<std::string, ScenarioEntry> scenarios;
  std::vector<std::string> suite_order;
  std::unique_ptr<ResponseStore> responses;
  std::atomic<std::uint64_t> next_trace{0};
  std::string epoch;

  std::string new_trace_id()
  {
    char buf[64];
    std::snprintf(
      buf, sizeof(buf), "%s-%06llu", epoch.c_str(),
      static_cast<unsigned long long>(++next_trace));
    return buf;
  }
};

/// Protocol violation: the session answers with an error frame and closes.
struct ProtocolError
{
  std::string code;
  std::string detail;
};

bool safe_id(const std::string & id)
{
  return !id.empty() && id.find("..") == std::string::npos &&
         std::all_of(id.begin(), id.end(), [](const char c) {
           return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.';
         });
}

std::string_view mime_type(const std::filesystem::path & path)
{
  const auto ext = path.extension().string();
  if (ext == ".html" || ext == ".htm") return "text/html";
  if (ext == ".js" || ext == ".mjs") return "application/javascript";
  if (ext == ".css") return "text/css";
  if (ext == ".json") return "application/json";
  if (ext == ".svg") return "image/svg+xml";
  if (ext == ".png") return "image/png";
  return "application/octet-stream";
}

const json & field(const json & msg, const char * key, const char * type)
{
  const auto it = msg.find(key);
  if (it == msg.end()) {
    throw ProtocolError{"bad_message", std::string(type) + "." + key + " is required"};
  }
  return *it;
}

double finite_number(const json & msg, const char * key, const char * type)
{
  const auto & v = field(msg, key, type);
  if (!v.is_number() || !std::isfinite(v.get<double>())) {
    throw ProtocolError{"bad_message", std::string(type) + "." + key + " must be a finite number"};
  }
  return v.get<double>();
}

std::optional<std::string> optional_string(const json & msg, const char * key, const char * type)
{
  const auto it = msg.find(key);
  if (it == msg.end() || it->is_null()) {
    return std::nullopt;
  }
  if (!it->is_string()) {
    throw ProtocolError{"bad_message", std::string(type) + "." + key + " must be a string"};
  }
  return it->get<std::string>();
}

class WsSession : public std::enable_shared_from_this<WsSession>
{
public:
  WsSession(tcp::socket && socket, std::shared_ptr<Shared> shared)
  : ws_(std::move(socket)), timer_(ws_.get_executor()), shared_(std::move(shared))
  {
  }

  void run(http::request<http::string_body> req)
  {
    ws_.set_option(websocket::stream_base::timeout::suggested(beast::role_type::server));
    ws_.async_accept(req, beast::bind_front_handler(&WsSession::on_accept, shared_from_this()));
  }

private:
  void on_accept(const beast::error_code ec)
  {
    if (ec) {
      spdlog::debug("websocket accept failed: {}", ec.message());
      return;
    }
    do_read();
  }

  void do_read()
  {
    ws_.async_read(buffer_, beast::bind_front_handler(&WsSession::on_read, shared_from_this()));
  }

  void on_read(const beast::error_code ec, std::size_t)
  {
    if (ec) {
      on_disconnect();
      return;
    }
    const auto text = beast::buffers_to_string(buffer_.data());
    buffer_.consume(buffer_.size());
    try {
      handle_message(text);
    } catch (const ProtocolError & e) {
      fail(e.code, e.detail);
    } catch (const std::exception & e) {
      spdlog::error("session {}: {}", trace_id_, e.what());
      fail("internal_error", e.what());
    }
    if (!closing_) {
      do_read();
    }
  }

  void handle_message(const std::string & text)
  {
    json msg;
    try {
      msg = json::parse(text);
    } catch (const json::parse_error & e) {
      throw ProtocolError{"bad_json", e.what()};
    }
    if (!msg.is_object() || !msg.contains("type") || !msg["type"].is_string()) {
      throw ProtocolError{"bad_message", "messages are objects with a string type"};
    }
    const auto type = msg["type"].get<std::string>();
    if (type == "hello") {
      on_hello(msg);
    } else if (type == "control") {
      on_control(msg);
    } else if (type == "quiz_answer") {
      on_quiz_answer(msg);
    } else {
      throw ProtocolError{"unknown_type", "unknown message type '" + type + "'"};
    }
  }

  void on_hello(const json & msg)
  {
    if (started_) {
      throw ProtocolError{"duplicate_hello", "session already started"};
    }
    const auto & mode_field = field(msg, "mode", "hello");
    const auto mode =
      mode_field.is_string() ? session_mode_from_string(mode_field.get<std::string>()) : std::nullopt;
    if (!mode) {
      throw ProtocolError{"bad_mode", "hello.mode must be manual_preview, autopilot_observe or quiz"};
    }
    mode_ = *mode;
    const auto scenario_id = optional_string(msg, "scenario_id", "hello");

    if (mode_ == SessionMode::kQuiz) {
      if (shared_->suite_order.empty()) {
        throw ProtocolError{"no_suite", "quiz mode needs a server started with a suite"};
      }
      const auto condition = optional_string(msg, "condition", "hello");
      const auto parsed = condition ? harness::condition_from_string(*condition) : std::nullopt;
      if (!parsed) {
        throw ProtocolError{"bad_message", "quiz hello.condition must be treatment or comparison"};
      }
      condition_ = *parsed;
      if (scenario_id) {
        if (!is_suite_scenario(*scenario_id)) {
          throw ProtocolError{"unknown_scenario", "no suite scenario '" + *scenario_id + "'"};
        }
        playlist_ = {*scenario_id};
      } else {
        playlist_ = shared_->suite_order;
      }
    } else {
      playlist_ = {resolve_scenario(scenario_id)};
    }
    started_ = true;
    participant_id_ = optional_string(msg, "participant_id", "hello")
                        .value_or("participant-" + shared_->new_trace_id());
    start_scenario();
  }

  [[nodiscard]] bool is_suite_scenario(const std::string & id) const
  {
    const auto it = shared_->scenarios.find(id);
    return it != shared_->scenarios.end() && it->second.from_suite;
  }

  [[nodiscard]] std::string resolve_scenario(const std::optional<std::string> & id) const
  {
    if (!id) {
      if (shared_->scenarios.empty()) {
        throw ProtocolError{"unknown_scenario", "server has no scenarios"};
      }
      for (const auto & [key, entry] : shared_->scenarios) {
        if (!entry.from_suite) {
          return key;
        }
      }
      return shared_->scenarios.begin()->first;
    }
    if (!shared_->scenarios.contains(*id)) {
      throw ProtocolError{"unknown_scenario", "no scenario '" + *id + "'"};
    }
    return *id;
  }

  void start_scenario()
  {
    const auto & id = playlist_[played_];
    const auto & entry = shared_->scenarios.at(id);
    auto cfg = make_session_config(mode_, entry.spec);
    cfg.autopilot = shared_->config.overrides.apply(cfg.autopilot);
    cfg.attach_delegate = mode_ == SessionMode::kManualPreview;
    cfg.scenario_id = id;
    try {
      session_.emplace(std::move(cfg));
    } catch (const ContractViolation & e) {
      throw ProtocolError{"bad_config", e.what()};
    }
    records_.clear();
    persisted_ = false;
    pending_a_lon_ = 0.0;
    pending_lane_ = sim::LaneChangeCommand::kNone;
    trace_id_ = shared_->new_trace_id();
    const auto & sc = session_->config().scenario;
    send({
      {"type", "ready"},
      {"trace_id", trace_id_},
      {"mode", std::string(to_string(mode_))},
      {"scenario_id", id},
      {"ticks", session_->total_ticks()},
      {"dt", sc.dt},
      {"tick_rate", session_->config().tick_rate},
      {"lanes", sim::to_json(sc.lanes)},
    });
    spdlog::info("session {} started: {} on {}", trace_id_, to_string(mode_), id);
    period_ = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
      std::chrono::duration<double>(1.0 / session_->config().tick_rate));
    next_deadline_ = std::chrono::steady_clock::now();
    schedule_tick();
  }

  void schedule_tick()
  {
    if (shared_->config.pacing) {
      timer_.expires_at(next_deadline_);
      next_deadline_ += period_;
    } else {
      timer_.expires_at(std::chrono::steady_clock::time_point::min());
    }
    timer_.async_wait(beast::bind_front_handler(&WsSession::on_tick, shared_from_this()));
  }

  void on_tick(const beast::error_code ec)
  {
    if (ec || closing_ || !session_ || session_->finished()) {
      return;
    }
    try {
      tick();
    } catch (const ProtocolError & e) {
      fail(e.code, e.detail);
    } catch (const std::exception & e) {
      spdlog::error("session {}: {}", trace_id_, e.what());
      fail("internal_error", e.what());
    }
  }

  void tick()
  {
    const sim::ControlInput control{pending_a_lon_, pending_lane_};
    pending_lane_ = sim::LaneChangeCommand::kNone;
    auto record = session_->advance(control);

    json traffic = json::array();
    for (const auto & t : record.traffic) {
      traffic.push_back(sim::to_json(t));
    }
    json state = {
      {"type", "state"},
      {"tick", record.tick},
      {"time", record.time},
      {"ego", sim::to_json(record.ego)},
      {"traffic", std::move(traffic)},
    };
    if (mode_ == SessionMode::kQuiz) {
      state["scenario_id"] = playlist_[played_];
    }
    send(std::move(state));
    if (mode_ == SessionMode::kManualPreview && record.preview_event) {
      auto preview = to_json(*record.preview_event);
      preview["type"] = "preview";
      send(std::move(preview));
    }
    if (mode_ == SessionMode::kAutopilotObserve && record.executed_maneuver_start) {
      send({
        {"type", "executed_action"},
        {"tick", record.tick},
        {"maneuver", std::string(autopilot::to_string(*record.executed_maneuver_start))},
      });
    }
    records_.push_back(std::move(record));

    if (!session_->finished()) {
      schedule_tick();
      return;
    }
    persist();
    json end = {{"type", "end"}, {"trace_id", trace_id_}};
    if (mode_ == SessionMode::kQuiz) {
      end["scenario_id"] = playlist_[played_];
    }
    send(std::move(end));
    ++played_;
    if (played_ < playlist_.size()) {
      start_scenario();
    } else if (mode_ != SessionMode::kQuiz) {
      close_after_writes();
    }
  }

  void on_control(const json & msg)
  {
    if (!started_) {
      throw ProtocolError{"not_ready", "control before hello"};
    }
    const double a_lon = finite_number(msg, "a_lon_cmd", "control");
    auto lane = sim::LaneChangeCommand::kNone;
    if (const auto cmd = optional_string(msg, "lane_change_cmd", "control")) {
      const auto parsed = sim::lane_change_command_from_string(*cmd);
      if (!parsed) {
        throw ProtocolError{"bad_message", "control.lane_change_cmd must be none, left or right"};
      }
      lane = *parsed;
    }
    if (mode_ != SessionMode::kManualPreview || !session_ || session_->finished()) {
      return;
    }
    const auto clamped = sim::sim_params_for(session_->config().scenario)
                           .limits.clamp({a_lon, lane});
    pending_a_lon_ = clamped.a_lon_cmd;
    if (lane != sim::LaneChangeCommand::kNone) {
      pending_lane_ = lane;
    }
    send({
      {"type", "control_ack"},
      {"tick", session_->world().tick},
      {"a_lon_cmd", clamped.a_lon_cmd},
      {"lane_change_cmd", std::string(sim::to_string(pending_lane_))},
    });
  }

  void on_quiz_answer(const json & msg)
  {
    if (!started_ || mode_ != SessionMode::kQuiz) {
      throw ProtocolError{"mode_mismatch", "quiz_answer outside a quiz session"};
    }
    const auto id = optional_string(msg, "scenario_id", "quiz_answer");
    if (!id || !is_suite_scenario(*id)) {
      throw ProtocolError{"unknown_scenario", "quiz_answer.scenario_id must name a suite scenario"};
    }
    harness::ScenarioAnswer answer;
    answer.scenario_id = *id;
    answer.t_hat = finite_number(msg, "t_hat", "quiz_answer");
    if (msg.contains("confidence")) {
      answer.confidence = finite_number(msg, "confidence", "quiz_answer");
    }
    shared_->responses->record(participant_id_, condition_, answer);
    send({{"type", "answer_ack"}, {"scenario_id", answer.scenario_id}});
  }

  void persist()
  {
    if (persisted_ || !session_ || records_.empty()) {
      return;
    }
    persisted_ = true;
    const auto path = shared_->config.trace_dir / (trace_id_ + ".jsonl");
    try {
      write_text_file(path, serialize_trace(session_->config(), records_));
      spdlog::info("session {} persisted {} records to {}", trace_id_, records_.size(), path.string());
    } catch (const std::exception & e) {
      spdlog::error("session {}: {}", trace_id_, e.what());
    }
  }

  void fail(const std::string & code, const std::string & detail)
  {
    spdlog::warn("session {}: {} ({})", trace_id_.empty() ? "-" : trace_id_, code, detail);
    timer_.cancel();
    persist();
    send({{"type", "error"}, {"code", code}, {"detail", detail}});
    close_after_writes();
  }

  void on_disconnect()
  {
    closing_ = true;
    timer_.cancel();
    persist();
  }

  void send(json msg)
  {
    queue_.push_back(msg.dump());
    if (!writing_) {
      do_write();
    }
  }

  void do_write()
  {
    writing_ = true;
    ws_.text(true);
    ws_.async_write(
      net::buffer(queue_.front()),
      beast::bind_front_handler(&WsSession::on_write, shared_from_this()));
  }

  void on_write(const beast::error_code ec, std::size_t)
  {
    if (ec) {
      writing_ = false;
      queue_.clear();
      on_disconnect();
      return;
    }
    queue_.pop_front();
    if (!queue_.empty()) {
      do_write();
      return;
    }
    writing_ = false;
    if (closing_ && !close_sent_) {
      close_now();
    }
  }

  void close_after_writes()
  {
    closing_ = true;
    timer_.cancel();
    if (!writing_ && !close_sent_) {
      close_now();
    }
  }

  void close_now()
  {
    close_sent_ = true;
    ws_.async_close(
      websocket::close_code::normal,
      [self = shared_from_this()](const beast::error_code) {});
  }

  websocket::stream<beast::tcp_stream> ws_;
  beast::flat_buffer buffer_;
  net::steady_timer timer_;
  std::shared_ptr<Shared> shared_;
  std::deque<std::string> queue_;
  bool writing_{false};
  bool closing_{false};
  bool close_sent_{false};

  bool started_{false};
  SessionMode mode_{SessionMode::kManualPreview};
  harness::Condition condition_{harness::Condition::kTreatment};
  std::string participant_id_;
  std::vector<std::string> playlist_;
  std::size_t played_{0};
  std::optional<Session> session_;
  std::vector<TraceRecord> records_;
  std::string trace_id_;
  bool persisted_{false};
  double pending_a_lon_{0.0};
  sim::LaneChangeCommand pending_lane_{sim::LaneChangeCommand::kNone};
  std::chrono::steady_clock::duration period_{};
  std::chrono::steady_clock::time_point next_deadline_{};
};

class HttpConnection : public std::enable_shared_from_this<HttpConnection>
{
public:
  HttpConnection(tcp::socket && socket, std::shared_ptr<Shared> shared)
  : stream_(std::move(socket)), shared_(std::move(shared))
  {
  }

  void run()
  {
    stream_.expires_after(std::chrono::seconds(30));
    http::async_read(
      stream_, buffer_, req_,
      beast::bind_front_handler(&HttpConnection::on_read, shared_from_this()));
  }

private:
  void on_read(const beast::error_code ec, std::size_t)
  {
    if (ec) {
      return;
    }
    if (websocket::is_upgrade(req_)) {
      stream_.expires_never();
      std::make_shared<WsSession>(stream_.release_socket(), shared_)->run(std::move(req_));
      return;
    }
    respond();
  }

  void respond()
  {
    auto res = std::make_shared<http::response<http::string_body>>();
    res->version(req_.version());
    res->keep_alive(false);
    res->set(http::field::server, "shadowpilot");
    const auto body = lookup();
    if (!body) {
      res->result(http::status::not_found);
      res->set(http::field::content_type, "text/plain");
      res->body() = "not found\n";
    } else {
      res->result(http::status::ok);
      res->set(http::field::content_type, std::string(mime_type(body->first)));
      if (req_.method() != http::verb::head) {
        res->body() = body->second;
      }
    }
    res->prepare_payload();
    http::async_write(
      stream_, *res, [self = shared_from_this(), res](const beast::error_code, std::size_t) {
        beast::error_code ignored;
        self->stream_.socket().shutdown(tcp::socket::shutdown_send, ignored);
      });
  }

  [[nodiscard]] std::optional<std::pair<std::filesystem::path, std::string>> lookup() const
  {
    const auto & root = shared_->config.static_dir;
    if (!root || (req_.method() != http::verb::get && req_.method() != http::verb::head)) {
      return std::nullopt;
    }
    std::string target(req_.target());
    target = target.substr(0, target.find('?'));
    if (target.empty() || target.front() != '/' || target.find("..") != std::string::npos) {
      return std::nullopt;
    }
    auto path = *root / target.substr(1);
    if (target.back() == '/') {
      path /= "index.html";
    }
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) {
      return std::nullopt;
    }
    try {
      return std::make_pair(path, harness::read_text_file(path));
    } catch (const std::exception &) {
      return std::nullopt;
    }
  }

  beast::tcp_stream stream_;
  beast::flat_buffer buffer_;
  http::request<http::string_body> req_;
  std::shared_ptr<Shared> shared_;
};

std::pair<std::string, std::uint16_t> split_bind(const std::string & bind)
{
  const auto colon = bind.rfind(':');
  if (colon == std::string::npos) {
    throw UsageError("bind address must be host:port, got '" + bind + "'");
  }
  auto host = bind.substr(0, colon);
  if (host.size() > 1 && host.front() == '[' && host.back() == ']') {
    host = host.substr(1, host.size() - 2);
  }
  const auto port_text = bind.substr(colon + 1);
  int port = -1;
  try {
    std::size_t used = 0;
    port = std::stoi(port_text, &used);
    if (used != port_text.size()) {
      port = -1;
    }
  } catch (const std::exception &) {
  }
  if (port < 0 || port > 65535) {
    throw UsageError("bad port in bind address '" + bind + "'");
  }
  return {host, static_cast<std::uint16_t>(port)};
}

std::string startup_epoch()
{
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y%m%dT%H%M%SZ", &tm);
  return buf;
}

}  // namespace

struct Server::Impl : std::enable_shared_from_this<Server::Impl>
{
  explicit Impl(std::shared_ptr<Shared> s) : shared(std::move(s)) {}

  void do_accept()
  {
    acceptor.async_accept(
      net::make_strand(ioc), [self = shared_from_this()](beast::error_code ec, tcp::socket socket) {
        if (ec) {
          if (ec != net::error::operation_aborted) {
            spdlog::warn("accept failed: {}", ec.message());
            self->do_accept();
          }
          return;
        }
        std::make_shared<HttpConnection>(std::move(socket), self->shared)->run();
        self->do_accept();
      });
  }

  std::shared_ptr<Shared> shared;
  net::io_context ioc;
  tcp::acceptor acceptor{ioc};
  std::uint16_t port{0};
};

Server::Server(ServerConfig config)
{
  auto shared = std::make_shared<Shared>();
  shared->config = std::move(config);
  shared->epoch = startup_epoch();
  if (shared->config.threads < 1) {
    throw UsageError("server needs at least one thread");
  }
  if (const auto & dir = shared->config.scenario_dir) {
    if (!std::filesystem::is_directory(*dir)) {
      throw UsageError(dir->string() + ": not a directory");
    }
    for (const auto & entry : std::filesystem::directory_iterator(*dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") {
        const auto id = entry.path().stem().string();
        if (!safe_id(id)) {
          spdlog::warn("skipping scenario file with unusable name: {}", entry.path().string());
          continue;
        }
        shared->scenarios[id] = {sim::load_scenario(entry.path()), false};
      }
    }
  }
  if (const auto & suite = shared->config.suite_path) {
    for (auto & s : harness::load_suite(*suite)) {
      if (shared->scenarios.contains(s.id)) {
        throw UsageError("suite scenario " + s.id + " clashes with a scenario file");
      }
      shared->suite_order.push_back(s.id);
      shared->scenarios[s.id] = {std::move(s.spec), true};
    }
  }
  std::filesystem::create_directories(shared->config.trace_dir);
  shared->responses =
    std::make_unique<ResponseStore>(shared->config.trace_dir / "responses.json");
  impl_ = std::make_shared<Impl>(std::move(shared));
}

Server::~Server()
{
  stop();
}

std::uint16_t Server::start()
{
  const auto [host, port] = split_bind(impl_->shared->config.bind_address);
  const tcp::endpoint endpoint(net::ip::make_address(host), port);
  auto & acceptor = impl_->acceptor;
  acceptor.open(endpoint.protocol());
  acceptor.set_option(net::socket_base::reuse_address(true));
  acceptor.bind(endpoint);
  acceptor.listen(net::socket_base::max_listen_connections);
  impl_->port = acceptor.local_endpoint().port();
  impl_->do_accept();
  spdlog::info(
    "serving on {}:{} ({} scenarios, traces in {})", host, impl_->port,
    impl_->shared->scenarios.size(), impl_->shared->config.trace_dir.string());
  return impl_->port;
}

void Server::run(const bool handle_signals)
{
  std::optional<net::signal_set> signals;
  if (handle_signals) {
    signals.emplace(impl_->ioc, SIGINT, SIGTERM);
    signals->async_wait([this](const beast::error_code ec, int) {
      if (!ec) {
        spdlog::info("shutting down");
        stop();
      }
    });
  }
  std::vector<std::thread> extra;
  for (int i = 1; i < impl_->shared->config.threads; ++i) {
    extra.emplace_back([this] { impl_->ioc.run(); });
  }
  impl_->ioc.run();
  for (auto & t : extra) {
    t.join();
  }
}

void Server::stop()
{
  impl_->ioc.stop();
}

std::uint16_t Server::port() const
{
  return impl_->port;
}

std::filesystem::path Server::responses_path() const
{
  return impl_->shared->responses->path();
}

}  // namespace shadowpilot::session
