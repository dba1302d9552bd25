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

#include "windres/weibull.h"

#include <cmath>
#include <numbers>

#include <fmt/core.h>

#include "windres/random.h"
#include "windres/special.h"

namespace windres {

WeibullModel::WeibullModel(double shape, double scale)
    : shape_(shape), scale_(scale) {
  if (!(shape > 0.0) || !std::isfinite(shape)) {
    throw DomainError(fmt::format("Weibull shape k = {} must be > 0", shape));
  }
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw DomainError(fmt::format("Weibull scale c = {} must be > 0", scale));
  }
}

double pdf(const WeibullModel& model, double v) {
  if (!(v >= 0.0)) {
    throw DomainError(fmt::format("pdf: speed {} must be >= 0", v));
  }
  const double k = model.shape();
  const double c = model.scale();
  if (v == 0.0) {
    if (k < 1.0) {
      throw DomainError("pdf: density is unbounded at v = 0 for k < 1");
    }
    return k == 1.0 ? 1.0 / c : 0.0;
  }
  const double x = v / c;
  return (k / c) * std::pow(x, k - 1.0) * std::exp(-std::pow(x, k));
}

double cdf(const WeibullModel& model, double v) {
  if (!(v >= 0.0)) {
    throw DomainError(fmt::format("cdf: speed {} must be >= 0", v));
  }
  return -std::expm1(-std::pow(v / model.scale(), model.shape()));
}

double quantile(const WeibullModel& model, double p) {
  if (!(p >= 0.0 && p < 1.0)) {
    throw DomainError(fmt::format("quantile: probability {} not in [0, 1)", p));
  }
  return model.scale() * std::pow(-std::log1p(-p), 1.0 / model.shape());
}

CharacteristicSpeeds characteristic_speeds(const WeibullModel& model) {
  const double k = model.shape();
  const double c = model.scale();
  CharacteristicSpeeds s;
  s.mode = k <= 1.0 ? 0.0 : c * std::pow(1.0 - 1.0 / k, 1.0 / k);
  s.median = c * std::pow(std::numbers::ln2, 1.0 / k);
  s.mean = c * gamma_fn(1.0 + 1.0 / k);
  s.max_energy = c * std::pow(1.0 + 2.0 / k, 1.0 / k);
  return s;
}

std::vector<double> sample(const WeibullModel& model, std::size_t n,
                           std::uint64_t seed) {
  Rng rng(seed);
  return sample(model, n, rng);
}

}  // namespace windres
