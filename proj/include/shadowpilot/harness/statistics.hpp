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

#ifndef SHADOWPILOT__HARNESS__STATISTICS_HPP_
#define SHADOWPILOT__HARNESS__STATISTICS_HPP_

#include <cstddef>
#include <span>

namespace shadowpilot::harness
{

struct GroupSummary
{
  double mean{0.0};
  double sd{0.0};  // sample standard deviation (n - 1 denominator)
  std::size_t n{0};
};

[[nodiscard]] GroupSummary summarize(std::span<const double> samples);

struct TTestResult
{
  double t{0.0};
  int df{0};
  double p_two_tailed{1.0};
  double p_one_tailed{1.0};  // P(T >= t): alternative mean(A) > mean(B)
};

/// Pooled-variance two-sample t; positive when mean(A) > mean(B).
/// Throws ContractViolation when a group has fewer than two samples.
[[nodiscard]] TTestResult student_t(std::span<const double> a, std::span<const double> b);
[[nodiscard]] TTestResult student_t(const GroupSummary & a, const GroupSummary & b);

[[nodiscard]] double pooled_sd(const GroupSummary & a, const GroupSummary & b);

struct EffectSizes
{
  double cohens_d{0.0};
  double hedges_g{0.0};
  double correction{1.0};  // J
};

/// Small-sample correction J = 1 - 3 / (4 df - 1).
[[nodiscard]] double hedges_correction(int df);

/// d = |mean(A) - mean(B)| / pooled sd, g = J d.
/// Throws UndefinedEffect when the pooled sd is zero.
[[nodiscard]] EffectSizes effect_sizes(std::span<const double> a, std::span<const double> b);
[[nodiscard]] EffectSizes effect_sizes(const GroupSummary & a, const GroupSummary & b);

/// Group sizes up to this total use complete enumeration for the exact p.
inline constexpr std::size_t kExactMannWhitneyLimit = 12;

struct MannWhitneyResult
{
  double u_a{0.0};  // sum over pairs of [a > b] + 0.5 [a = b]
  double u_b{0.0};
  double p_upper{1.0};  // P(U >= u_a) under random group assignment
  double p_lower{1.0};  // P(U <= u_a)
  double p_one_tailed{1.0};  // tail in the direction of the observed effect
  bool exact{true};
};

/// Throws ContractViolation on an empty group or a NaN sample.
[[nodiscard]] MannWhitneyResult mann_whitney_u(
  std::span<const double> a, std::span<const double> b);

}  // namespace shadowpilot::harness

#endif  // SHADOWPILOT__HARNESS__STATISTICS_HPP_
