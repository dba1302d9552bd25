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

#ifndef WINDRES_METRICS_H_
#define WINDRES_METRICS_H_

#include <functional>
#include <span>

#include "windres/power_curve.h"
#include "windres/weibull.h"

namespace windres {

inline constexpr double kSeaLevelDensity = 1.225;  // kg/m^3, ISA
inline constexpr double kHoursPerYear = 8760.0;    // 365-day year
inline constexpr double kDefaultThresholdSpeed = 6.0;  // m/s

struct NaepOptions {
  CurveEvaluator evaluator = CurveEvaluator::kTabular;
  double tau_hours = kHoursPerYear;
  // Absolute target on the expected power integral, in kW.
  double abs_tolerance = 1e-9;
};

struct MetricsOptions {
  double air_density = kSeaLevelDensity;
  double tau_hours = kHoursPerYear;
  double threshold_speed = kDefaultThresholdSpeed;
  CurveEvaluator evaluator = CurveEvaluator::kTabular;
};

struct SiteMetrics {
  double wpd = 0.0;             // W/m^2
  double p_exceed = 0.0;        // P(V > threshold_speed)
  double naep = 0.0;            // GWh/MWp/year
  double air_density = 0.0;     // kg/m^3 used for wpd
  double hours_per_year = 0.0;  // τ used for naep
  double threshold_speed = 0.0;
};

// ½ ρ v^3 in W/m^2.
double instantaneous_power_density(double v, double rho);

// ½ ρ c^3 Γ(1 + 3/k), the expectation of ½ ρ v^3 under the model.
double wind_power_density(const WeibullModel& model, double rho);

// exp(-(v/c)^k) = 1 - F(v).
double exceedance_probability(const WeibullModel& model, double v_threshold);

// Normalized annual energy production for the given curve:
//
//   NAEP = τ ∫_{cut-in}^{cut-out} f(v) P(v) dv / capacity
//
// in GWh per MWp per year. The integral is split at rated speed; the plateau
// uses rated_power (F(cut_out) - F(rated)) exactly and the ramp is integrated
// piecewise between table nodes (tabular) or in one piece (polynomial).
double naep(const WeibullModel& model, const PowerCurve& curve,
            const NaepOptions& options = {});

// Same integral for an arbitrary power function in kW over
// [breakpoints.front(), breakpoints.back()], split at every breakpoint.
double naep(const WeibullModel& model,
            const std::function<double(double)>& power_kw,
            std::span<const double> breakpoints, double capacity_kw,
            const NaepOptions& options = {});

SiteMetrics site_metrics(const WeibullModel& model, const PowerCurve& curve,
                         const MetricsOptions& options = {});

}  // namespace windres

#endif  // WINDRES_METRICS_H_
