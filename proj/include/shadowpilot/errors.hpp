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

#ifndef SHADOWPILOT__ERRORS_HPP_
#define SHADOWPILOT__ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shadowpilot
{

/// A caller broke a documented precondition.
class ContractViolation : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed scenario, control log, trace, suite or responses file.
class ParseError : public std::runtime_error
{
public:
  ParseError(const std::string & source, std::size_t line, const std::string & detail)
  : std::runtime_error(
      source + (line > 0 ? ":" + std::to_string(line) : std::string{}) + ": " + detail),
    line_(line)
  {
  }

  [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Inconsistent flags, e.g. manual_preview without a control log.
class UsageError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Participant responses do not line up with the test suite.
class IngestionError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Rejection sampling gave up.
class GenerationFailure : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Standardized effect with zero pooled standard deviation.
class UndefinedEffect : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

}  // namespace shadowpilot

#endif  // SHADOWPILOT__ERRORS_HPP_
