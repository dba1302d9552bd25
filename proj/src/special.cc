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

#include "windres/special.h"

#include <array>
#include <cmath>
#include <numbers>

#include <fmt/core.h>

#include "windres/error.h"

namespace windres {

namespace {

constexpr double kLanczosG = 7.0;

constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

// Valid for x >= 0.5.
double lanczos_gamma(double x) {
  const double z = x - 1.0;
  double series = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    series += kLanczosCoeffs[i] / (z + static_cast<double>(i));
  }
  const double t = z + kLanczosG + 0.5;
  // t^(z+0.5) e^-t split in two halves so Γ(x) stays finite up to x ≈ 171.
  const double half_power = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half_power *
         (half_power * std::exp(-t)) * series;
}

}  // namespace

double gamma_fn(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(fmt::format("gamma_fn: argument {} must be > 0", x));
  }
  if (x < 0.5) {
    // Reflection: Γ(x) Γ(1-x) = π / sin(πx).
    return std::numbers::pi /
           (std::sin(std::numbers::pi * x) * lanczos_gamma(1.0 - x));
  }
  return lanczos_gamma(x);
}

}  // namespace windres
