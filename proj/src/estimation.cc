// Copyright 2026 The windres Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "windres/estimation.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include <fmt/core.h>

#include "windres/error.h"
#include "windres/special.h"

namespace windres {

namespace {

// Neumaier compensated summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

// Profile-likelihood equation in k, evaluated on log(v / v_max) so that
// v^k never overflows for large k.
class ProfileEquation {
 public:
  explicit ProfileEquation(std::vector<double> log_rel)
      : log_rel_(std::move(log_rel)) {
    CompensatedSum s;
    for (double lu : log_rel_) s.add(lu);
    mean_log_ = s.value() / static_cast<double>(log_rel_.size());
  }

  struct Value {
    double residual;
    double derivative;
    double power_sum;  // Σ (v / v_max)^k
  };

  Value operator()(double k) const {
    CompensatedSum s0, s1, s2;
    for (double lu : log_rel_) {
      const double w = std::exp(k * lu);
      s0.add(w);
      s1.add(w * lu);
      s2.add(w * lu * lu);
    }
    const double m1 = s1.value() / s0.value();
    const double m2 = s2.value() / s0.value();
    return {m1 - 1.0 / k - mean_log_, (m2 - m1 * m1) + 1.0 / (k * k),
            s0.value()};
  }

 private:
  std::vector<double> log_rel_;
  double mean_log_ = 0.0;
};

// Moment-based starter, k0 = (s / mean)^-1.086.
double initial_shape(std::span<const double> speeds) {
  const double n = static_cast<double>(speeds.size());
  CompensatedSum sum;
  for (double v : speeds) sum.add(v);
  const double mean = sum.value() / n;
  CompensatedSum sq;
  for (double v : speeds) sq.add((v - mean) * (v - mean));
  const double sd = std::sqrt(sq.value() / (n - 1.0));
  if (!(sd > 0.0)) return 2.0;
  return std::clamp(std::pow(sd / mean, -1.086), 0.5, 20.0);
}

}  // namespace

double log_likelihood(const WeibullModel& model, std::span<const double> speeds) {
  if (speeds.empty()) {
    throw InsufficientDataError("log_likelihood: empty speed list");
  }
  const double k = model.shape();
  const double c = model.scale();
  const double log_kc = std::log(k / c);
  CompensatedSum total;
  for (double v : speeds) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw DomainError(
          fmt::format("log_likelihood: speed {} must be > 0 and finite", v));
    }
    const double x = v / c;
    total.add(log_kc + (k - 1.0) * std::log(x) - std::pow(x, k));
  }
  return total.value();
}

FitResult fit_mle(std::span<const double> speeds, const FitOptions& options) {
  std::vector<double> used;
  used.reserve(speeds.size());
  for (double v : speeds) {
    if (v > 0.0 && std::isfinite(v)) used.push_back(v);
  }
  if (used.size() < 2) {
    throw InsufficientDataError(fmt::format(
        "fit_mle: {} usable positive speeds, need at least 2", used.size()));
  }
  const auto [min_it, max_it] = std::minmax_element(used.begin(), used.end());
  const double v_max = *max_it;
  if (*min_it == v_max) {
    throw DegenerateError(fmt::format(
        "fit_mle: all {} speeds equal {} m/s; shape diverges", used.size(),
        v_max));
  }

  std::vector<double> log_rel;
  log_rel.reserve(used.size());
  for (double v : used) log_rel.push_back(std::log(v / v_max));
  const ProfileEquation equation(std::move(log_rel));

  double lo = options.bracket_low;
  double hi = options.bracket_high;
  auto brackets = [&] {
    return equation(lo).residual < 0.0 && equation(hi).residual > 0.0;
  };
  if (!brackets()) {
    lo /= 10.0;
    hi *= 10.0;
    if (!brackets()) {
      const double mid = 0.5 * (lo + hi);
      throw ConvergenceError(
          fmt::format("fit_mle: no sign change of the shape equation on "
                      "[{}, {}]",
                      lo, hi),
          mid, equation(mid).residual);
    }
  }

  double k = std::clamp(initial_shape(used), lo, hi);
  ProfileEquation::Value value = equation(k);
  int iterations = 0;
  bool converged = value.residual == 0.0;
  while (!converged && iterations < options.max_iterations) {
    ++iterations;
    if (value.residual < 0.0) {
      lo = k;
    } else {
      hi = k;
    }
    double next = k - value.residual / value.derivative;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = next - k;
    k = next;
    value = equation(k);
    converged = value.residual == 0.0 ||
                (std::abs(step) <= options.step_tolerance * k &&
                 std::abs(value.residual) <= options.residual_tolerance);
  }
  if (!converged) {
    throw ConvergenceError(
        fmt::format("fit_mle: no convergence after {} iterations (k = {}, "
                    "residual = {})",
                    iterations, k, value.residual),
        k, value.residual);
  }

  const double n = static_cast<double>(used.size());
  const double c = v_max * std::pow(value.power_sum / n, 1.0 / k);
  FitResult result;
  result.model = WeibullModel(k, c);
  result.n_used = used.size();
  result.n_dropped = speeds.size() - used.size();
  result.log_likelihood = log_likelihood(result.model, used);
  result.distribution_mean = c * gamma_fn(1.0 + 1.0 / k);
  result.arithmetic_mean = arithmetic_mean(used);
  result.iterations = iterations;
  return result;
}

double arithmetic_mean(std::span<const double> speeds) {
  if (speeds.empty()) {
    throw InsufficientDataError("arithmetic_mean: empty speed list");
  }
  CompensatedSum sum;
  for (double v : speeds) sum.add(v);
  return sum.value() / static_cast<double>(speeds.size());
}

ValidationVerdict validate_means(double distribution_mean,
                                 double arithmetic_mean, double threshold) {
  ValidationVerdict verdict;
  verdict.threshold = threshold;
  verdict.gap = distribution_mean == arithmetic_mean
                    ? 0.0
                    : std::abs(distribution_mean - arithmetic_mean) /
                          arithmetic_mean;
  verdict.passed = verdict.gap <= threshold;
  return verdict;
}

}  // namespace windres
