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

#ifndef WINDRES_ATMOSPHERE_H_
#define WINDRES_ATMOSPHERE_H_

#include "windres/metrics.h"

namespace windres {

// ISA troposphere (0-11 km).
struct IsaConstants {
  static constexpr double kRho0 = 1.225;        // kg/m^3
  static constexpr double kT0 = 288.15;         // K
  static constexpr double kLapseRate = 0.0065;  // K/m
  static constexpr double kPressureExponent = 5.2559;  // g / (R L)
  static constexpr double kDensityExponent = kPressureExponent - 1.0;
  static constexpr double kMaxAltitude = 11000.0;  // m
};

struct CorrectedMetrics {
  double rho = 0.0;            // kg/m^3 at altitude
  double sigma_density = 0.0;  // rho / rho0
  double wpd_corrected = 0.0;  // W/m^2
  double naep_corrected = 0.0; // GWh/MWp/year
};

// rho0 (1 - L h / T0)^4.2559. DomainError outside [0, 11000] m.
double air_density(double altitude_m);

// air_density(h) / rho0.
double density_ratio(double altitude_m);

// (1 - L h / T0)^5.2559, the ISA pressure ratio. Diagnostic only; the
// corrections below never use it.
double pressure_ratio(double altitude_m);

// Scales sea-level WPD and NAEP by the density ratio at the given altitude.
// NAEP is rescaled as a scalar; the power curve itself is not reshaped.
CorrectedMetrics correct_metrics(const SiteMetrics& metrics, double altitude_m);

}  // namespace windres

#endif  // WINDRES_ATMOSPHERE_H_
