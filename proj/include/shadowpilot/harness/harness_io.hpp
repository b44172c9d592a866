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

#ifndef SHADOWPILOT__HARNESS__HARNESS_IO_HPP_
#define SHADOWPILOT__HARNESS__HARNESS_IO_HPP_

#include "shadowpilot/harness/report.hpp"
#include "shadowpilot/harness/suite.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace shadowpilot::harness
{

[[nodiscard]] nlohmann::json suite_to_json(std::uint64_t seed, std::span<const TestScenario> suite);
[[nodiscard]] std::vector<TestScenario> parse_suite(const std::string & text, const std::string & source);
[[nodiscard]] std::vector<TestScenario> load_suite(const std::filesystem::path & path);

[[nodiscard]] nlohmann::json to_json(const ParticipantResponse & response);
[[nodiscard]] nlohmann::json responses_to_json(std::span<const ParticipantResponse> responses);
/// Confidences are clamped into [0, 1] on ingestion. An empty list is an IngestionError.
[[nodiscard]] std::vector<ParticipantResponse> parse_responses(
  const std::string & text, const std::string & source);
[[nodiscard]] std::vector<ParticipantResponse> load_responses(const std::filesystem::path & path);

[[nodiscard]] nlohmann::json to_json(const MetricsReport & report);

/// Reads a whole file; throws ParseError when it cannot be opened.
[[nodiscard]] std::string read_text_file(const std::filesystem::path & path);

}  // namespace shadowpilot::harness

#endif  // SHADOWPILOT__HARNESS__HARNESS_IO_HPP_
