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

#include "windres/atmosphere.h"

#include <cmath>

#include <fmt/core.h>

#include "windres/error.h"

namespace windres {

namespace {

double temperature_ratio(double altitude_m) {
  if (!(altitude_m >= 0.0 && altitude_m <= IsaConstants::kMaxAltitude)) {
    throw DomainError(fmt::format(
        "altitude {} m outside the troposphere model range [0, {}]",
        altitude_m, IsaConstants::kMaxAltitude));
  }
  return 1.0 - IsaConstants::kLapseRate * altitude_m / IsaConstants::kT0;
}

}  // namespace

double density_ratio(double altitude_m) {
  return std::pow(temperature_ratio(altitude_m),
                  IsaConstants::kDensityExponent);
}

double air_density(double altitude_m) {
  return IsaConstants::kRho0 * density_ratio(altitude_m);
}

double pressure_ratio(double altitude_m) {
  return std::pow(temperature_ratio(altitude_m),
                  IsaConstants::kPressureExponent);
}

CorrectedMetrics correct_metrics(const SiteMetrics& metrics, double altitude_m) {
  CorrectedMetrics out;
  out.sigma_density = density_ratio(altitude_m);
  out.rho = IsaConstants::kRho0 * out.sigma_density;
  out.wpd_corrected = out.sigma_density * metrics.wpd;
  out.naep_corrected = out.sigma_density * metrics.naep;
  return out;
}

}  // namespace windres
