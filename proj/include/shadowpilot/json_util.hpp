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

#ifndef SHADOWPILOT__JSON_UTIL_HPP_
#define SHADOWPILOT__JSON_UTIL_HPP_

#include "shadowpilot/errors.hpp"

#include <json.hpp>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>

// Small helpers for strict schema reading. Every failure is a ContractViolation whose
// message starts with the JSON path of the offending value.
namespace shadowpilot::json_util
{

using nlohmann::json;

inline std::string child(const std::string & path, const std::string_view key)
{
  return path + "." + std::string(key);
}

inline void expect_object(const json & j, const std::string & path)
{
  if (!j.is_object()) {
    throw ContractViolation(path + ": expected an object");
  }
}

inline void reject_unknown_keys(
  const json & j, std::initializer_list<std::string_view> allowed, const std::string & path)
{
  expect_object(j, path);
  for (const auto & item : j.items()) {
    bool known = false;
    for (const auto key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ContractViolation(child(path, item.key()) + ": unknown field");
    }
  }
}

inline const json & required(const json & j, const std::string_view key, const std::string & path)
{
  const auto it = j.find(key);
  if (it == j.end()) {
    throw ContractViolation(child(path, key) + ": missing required field");
  }
  return *it;
}

inline double as_number(const json & j, const std::string & path)
{
  if (!j.is_number()) {
    throw ContractViolation(path + ": expected a number");
  }
  return j.get<double>();
}

inline std::int64_t as_integer(const json & j, const std::string & path)
{
  if (!j.is_number_integer()) {
    throw ContractViolation(path + ": expected an integer");
  }
  return j.get<std::int64_t>();
}

inline std::uint64_t as_unsigned(const json & j, const std::string & path)
{
  if (j.is_number_unsigned()) {
    return j.get<std::uint64_t>();
  }
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(j.get<std::int64_t>());
  }
  throw ContractViolation(path + ": expected a nonnegative integer");
}

inline std::string as_string(const json & j, const std::string & path)
{
  if (!j.is_string()) {
    throw ContractViolation(path + ": expected a string");
  }
  return j.get<std::string>();
}

inline bool as_bool(const json & j, const std::string & path)
{
  if (!j.is_boolean()) {
    throw ContractViolation(path + ": expected a boolean");
  }
  return j.get<bool>();
}

inline double number_or(
  const json & j, const std::string_view key, const double fallback, const std::string & path)
{
  const auto it = j.find(key);
  return it == j.end() ? fallback : as_number(*it, child(path, key));
}

/// Absent and null both map to nullopt.
inline const json * optional_field(const json & j, const std::string_view key)
{
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) {
    return nullptr;
  }
  return &*it;
}

}  // namespace shadowpilot::json_util

#endif  // SHADOWPILOT__JSON_UTIL_HPP_
