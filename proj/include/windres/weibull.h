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

#ifndef WINDRES_WEIBULL_H_
#define WINDRES_WEIBULL_H_

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "windres/error.h"

namespace windres {

// Two-parameter Weibull wind-speed distribution.
//
//   f(v) = (k/c) (v/c)^(k-1) exp(-(v/c)^k),   F(v) = 1 - exp(-(v/c)^k)
//
// k is the dimensionless shape, c the scale in m/s. Immutable after
// construction; every query is a pure function.
class WeibullModel {
 public:
  // Throws DomainError unless k > 0 and c > 0 (both finite).
  WeibullModel(double shape, double scale);

  double shape() const { return shape_; }
  double scale() const { return scale_; }

  friend bool operator==(const WeibullModel&, const WeibullModel&) = default;

 private:
  double shape_;
  double scale_;
};

struct CharacteristicSpeeds {
  double mode = 0.0;        // most probable speed
  double median = 0.0;      // F = 0.5
  double mean = 0.0;        // c Γ(1 + 1/k)
  double max_energy = 0.0;  // maximizer of f(v) v^3
};

// Probability density in s/m. Domain errors for v < 0, and for v = 0 with
// k < 1 where the density is unbounded. At k = 1, pdf(0) = 1/c.
double pdf(const WeibullModel& model, double v);

// Cumulative probability. Domain error for v < 0.
double cdf(const WeibullModel& model, double v);

// Inverse CDF, c (-ln(1-p))^(1/k). Domain error unless 0 <= p < 1.
double quantile(const WeibullModel& model, double p);

CharacteristicSpeeds characteristic_speeds(const WeibullModel& model);

// Inverse-CDF sampling from any callable returning uniforms in [0, 1).
template <typename UniformSource>
  requires std::invocable<UniformSource&> &&
           std::convertible_to<std::invoke_result_t<UniformSource&>, double>
std::vector<double> sample(const WeibullModel& model, std::size_t n,
                           UniformSource& uniform) {
  if (n == 0) {
    throw InsufficientDataError("sample: requested zero draws");
  }
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(quantile(model, static_cast<double>(uniform())));
  }
  return out;
}

// Seeded sampling through windres::Rng. Deterministic for a fixed seed.
std::vector<double> sample(const WeibullModel& model, std::size_t n,
                           std::uint64_t seed);

}  // namespace windres

#endif  // WINDRES_WEIBULL_H_
