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

#include "shadowpilot/harness/statistics.hpp"

#include "shadowpilot/errors.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <vector>

namespace shadowpilot::harness
{

GroupSummary summarize(const std::span<const double> samples)
{
  GroupSummary out;
  out.n = samples.size();
  if (samples.empty()) {
    return out;
  }
  double sum = 0.0;
  for (const double x : samples) {
    sum += x;
  }
  out.mean = sum / static_cast<double>(out.n);
  if (out.n > 1) {
    double ss = 0.0;
    for (const double x : samples) {
      ss += (x - out.mean) * (x - out.mean);
    }
    out.sd = std::sqrt(ss / static_cast<double>(out.n - 1));
  }
  return out;
}

double pooled_sd(const GroupSummary & a, const GroupSummary & b)
{
  const double df = static_cast<double>(a.n + b.n) - 2.0;
  const double pooled_var =
    (static_cast<double>(a.n - 1) * a.sd * a.sd + static_cast<double>(b.n - 1) * b.sd * b.sd) /
    df;
  return std::sqrt(pooled_var);
}

TTestResult student_t(const GroupSummary & a, const GroupSummary & b)
{
  if (a.n < 2 || b.n < 2) {
    throw ContractViolation("student_t: each group needs at least two samples");
  }
  TTestResult out;
  out.df = static_cast<int>(a.n + b.n - 2);

  const double diff = a.mean - b.mean;
  const double sp = pooled_sd(a, b);
  if (sp == 0.0) {
    out.t = diff == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), diff);
  } else {
    const double se =
      sp * std::sqrt(1.0 / static_cast<double>(a.n) + 1.0 / static_cast<double>(b.n));
    out.t = diff / se;
  }

  if (std::isinf(out.t)) {
    out.p_one_tailed = out.t > 0.0 ? 0.0 : 1.0;
    out.p_two_tailed = 0.0;
  } else {
    const boost::math::students_t dist(static_cast<double>(out.df));
    out.p_one_tailed = boost::math::cdf(boost::math::complement(dist, out.t));
    out.p_two_tailed =
      std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(out.t))));
  }
  return out;
}

TTestResult student_t(const std::span<const double> a, const std::span<const double> b)
{
  return student_t(summarize(a), summarize(b));
}

double hedges_correction(const int df)
{
  if (df < 1) {
    throw ContractViolation("hedges_correction: df must be at least 1");
  }
  return 1.0 - 3.0 / (4.0 * df - 1.0);
}

EffectSizes effect_sizes(const GroupSummary & a, const GroupSummary & b)
{
  if (a.n < 2 || b.n < 2) {
    throw ContractViolation("effect_sizes: each group needs at least two samples");
  }
  const double sp = pooled_sd(a, b);
  if (sp == 0.0) {
    throw UndefinedEffect("effect_sizes: pooled standard deviation is zero");
  }
  EffectSizes out;
  out.cohens_d = std::abs(a.mean - b.mean) / sp;
  out.correction = hedges_correction(static_cast<int>(a.n + b.n - 2));
  out.hedges_g = out.correction * out.cohens_d;
  return out;
}

EffectSizes effect_sizes(const std::span<const double> a, const std::span<const double> b)
{
  return effect_sizes(summarize(a), summarize(b));
}

namespace
{

// Twice U so that half-counted ties stay integral.
std::int64_t doubled_u(const std::span<const double> a, const std::span<const double> b)
{
  std::int64_t u2 = 0;
  for (const double x : a) {
    for (const double y : b) {
      if (x > y) {
        u2 += 2;
      } else if (x == y) {
        u2 += 1;
      }
    }
  }
  return u2;
}

void exact_tails(
  const std::span<const double> a, const std::span<const double> b, const std::int64_t observed,
  MannWhitneyResult & out)
{
  std::vector<double> pooled(a.begin(), a.end());
  pooled.insert(pooled.end(), b.begin(), b.end());
  const std::size_t total = pooled.size();
  const std::size_t n1 = a.size();

  // score[i][j] = 2 [x_i > x_j] + [x_i = x_j]
  std::vector<std::vector<int>> score(total, std::vector<int>(total, 0));
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t j = 0; j < total; ++j) {
      score[i][j] = pooled[i] > pooled[j] ? 2 : (pooled[i] == pooled[j] ? 1 : 0);
    }
  }

  std::uint64_t assignments = 0;
  std::uint64_t at_least = 0;
  std::uint64_t at_most = 0;
  // Walk every n1-subset of {0..total-1} as a bitmask (Gosper's hack).
  const std::uint32_t limit = 1U << total;
  for (std::uint32_t mask = (1U << n1) - 1U; mask < limit;) {
    std::int64_t u2 = 0;
    for (std::size_t i = 0; i < total; ++i) {
      if ((mask & (1U << i)) == 0U) {
        continue;
      }
      for (std::size_t j = 0; j < total; ++j) {
        if ((mask & (1U << j)) == 0U) {
          u2 += score[i][j];
        }
      }
    }
    ++assignments;
    at_least += u2 >= observed ? 1U : 0U;
    at_most += u2 <= observed ? 1U : 0U;

    const std::uint32_t lowest = mask & (~mask + 1U);
    const std::uint32_t ripple = mask + lowest;
    mask = (((ripple ^ mask) >> 2U) / lowest) | ripple;
  }
  out.p_upper = static_cast<double>(at_least) / static_cast<double>(assignments);
  out.p_lower = static_cast<double>(at_most) / static_cast<double>(assignments);
}

double standard_normal_cdf(const double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

void normal_tails(
  const std::span<const double> a, const std::span<const double> b, const double u,
  MannWhitneyResult & out)
{
  const double n1 = static_cast<double>(a.size());
  const double n2 = static_cast<double>(b.size());
  const double total = n1 + n2;

  std::map<double, int> tie_counts;
  for (const double x : a) {
    ++tie_counts[x];
  }
  for (const double x : b) {
    ++tie_counts[x];
  }
  double tie_term = 0.0;
  for (const auto & [value, count] : tie_counts) {
    const double t = count;
    tie_term += t * t * t - t;
  }

  const double mean = 0.5 * n1 * n2;
  const double variance = n1 * n2 / 12.0 * ((total + 1.0) - tie_term / (total * (total - 1.0)));
  if (!(variance > 0.0)) {
    out.p_upper = 1.0;
    out.p_lower = 1.0;
    return;
  }
  const double sigma = std::sqrt(variance);
  // Continuity-corrected tails.
  out.p_upper = 1.0 - standard_normal_cdf((u - mean - 0.5) / sigma);
  out.p_lower = standard_normal_cdf((u - mean + 0.5) / sigma);
  out.p_upper = std::clamp(out.p_upper, 0.0, 1.0);
  out.p_lower = std::clamp(out.p_lower, 0.0, 1.0);
}

}  // namespace

MannWhitneyResult mann_whitney_u(const std::span<const double> a, const std::span<const double> b)
{
  if (a.empty() || b.empty()) {
    throw ContractViolation("mann_whitney_u: both groups must be nonempty");
  }
  const auto has_nan = [](const std::span<const double> xs) {
    return std::any_of(xs.begin(), xs.end(), [](const double x) { return std::isnan(x); });
  };
  if (has_nan(a) || has_nan(b)) {
    throw ContractViolation("mann_whitney_u: samples must be real numbers");
  }

  MannWhitneyResult out;
  const std::int64_t u2 = doubled_u(a, b);
  out.u_a = 0.5 * static_cast<double>(u2);
  out.u_b = static_cast<double>(a.size() * b.size()) - out.u_a;

  out.exact = a.size() + b.size() <= kExactMannWhitneyLimit;
  if (out.exact) {
    exact_tails(a, b, u2, out);
  } else {
    normal_tails(a, b, out.u_a, out);
  }
  out.p_one_tailed = std::min(out.p_upper, out.p_lower);
  return out;
}

}  // namespace shadowpilot::harness
