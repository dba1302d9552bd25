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

#ifndef WINDRES_ESTIMATION_H_
#define WINDRES_ESTIMATION_H_

#include <cstddef>
#include <span>

#include "windres/weibull.h"

namespace windres {

// Safeguarded-Newton settings for the profile-likelihood equation in k.
struct FitOptions {
  double step_tolerance = 1e-10;      // relative |Δk| / k
  double residual_tolerance = 1e-12;  // |g(k)|
  int max_iterations = 200;
  double bracket_low = 0.1;
  double bracket_high = 50.0;
};

struct FitResult {
  WeibullModel model{1.0, 1.0};
  std::size_t n_used = 0;
  std::size_t n_dropped = 0;
  double log_likelihood = 0.0;
  double distribution_mean = 0.0;  // c Γ(1 + 1/k) at the fitted model
  double arithmetic_mean = 0.0;    // plain average of the speeds used
  int iterations = 0;
};

struct ValidationVerdict {
  bool passed = false;
  double gap = 0.0;  // |distribution mean - arithmetic mean| / arithmetic mean
  double threshold = 0.0;
};

// Σ ln f(v_i; k, c). Every speed must be > 0 (DomainError otherwise);
// InsufficientDataError on an empty list.
double log_likelihood(const WeibullModel& model, std::span<const double> speeds);

// Maximum-likelihood Weibull fit.
//
// Non-positive and non-finite speeds are dropped and counted in n_dropped.
// The scale is profiled out as c(k) = (Σ v^k / N)^(1/k), leaving the scalar
// equation
//
//   g(k) = Σ v^k ln v / Σ v^k - 1/k - mean(ln v) = 0,
//
// which is strictly increasing in k and is solved by Newton steps with a
// bisection fallback inside [bracket_low, bracket_high].
//
// Throws InsufficientDataError (< 2 usable speeds), DegenerateError (all
// usable speeds identical) or ConvergenceError (carrying the last k).
FitResult fit_mle(std::span<const double> speeds, const FitOptions& options = {});

// Throws InsufficientDataError for an empty list.
double arithmetic_mean(std::span<const double> speeds);

ValidationVerdict validate_means(double distribution_mean,
                                 double arithmetic_mean, double threshold);

inline ValidationVerdict validate_fit(const FitResult& fit,
                                      double threshold = 0.02) {
  return validate_means(fit.distribution_mean, fit.arithmetic_mean, threshold);
}

}  // namespace windres

#endif  // WINDRES_ESTIMATION_H_
