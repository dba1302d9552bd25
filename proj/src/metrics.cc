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

#include "windres/metrics.h"

#include <cmath>
#include <vector>

#include <fmt/core.h>

#include "windres/error.h"
#include "windres/quadrature.h"
#include "windres/special.h"

namespace windres {

namespace {

void check_density(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw DomainError(fmt::format("air density {} must be > 0", rho));
  }
}

// kW·h / (kW capacity) -> GWh per MWp.
double to_naep_units(double expected_kw, double tau_hours, double capacity_kw) {
  return tau_hours * expected_kw / (1e3 * capacity_kw);
}

double expected_power(const WeibullModel& model,
                      const std::function<double(double)>& power_kw,
                      std::span<const double> breakpoints, double abs_tol) {
  if (breakpoints.size() < 2) return 0.0;
  const double piece_tol = abs_tol / static_cast<double>(breakpoints.size() - 1);
  QuadratureOptions q{.abs_tolerance = piece_tol};
  auto integrand = [&](double v) { return pdf(model, v) * power_kw(v); };
  double total = 0.0;
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    total += integrate(integrand, breakpoints[i - 1], breakpoints[i], q).value;
  }
  return total;
}

}  // namespace

double instantaneous_power_density(double v, double rho) {
  if (!(v >= 0.0)) {
    throw DomainError(fmt::format("wind speed {} must be >= 0", v));
  }
  check_density(rho);
  return 0.5 * rho * v * v * v;
}

double wind_power_density(const WeibullModel& model, double rho) {
  check_density(rho);
  const double c = model.scale();
  return 0.5 * rho * c * c * c * gamma_fn(1.0 + 3.0 / model.shape());
}

double exceedance_probability(const WeibullModel& model, double v_threshold) {
  if (!(v_threshold >= 0.0)) {
    throw DomainError(
        fmt::format("exceedance threshold {} must be >= 0", v_threshold));
  }
  return std::exp(-std::pow(v_threshold / model.scale(), model.shape()));
}

double naep(const WeibullModel& model, const PowerCurve& curve,
            const NaepOptions& options) {
  std::vector<double> breaks{curve.cut_in()};
  if (options.evaluator == CurveEvaluator::kTabular) {
    for (const CurvePoint& p : curve.points()) {
      if (p.speed > curve.cut_in() && p.speed < curve.rated_speed()) {
        breaks.push_back(p.speed);
      }
    }
  }
  breaks.push_back(curve.rated_speed());

  const double ramp = expected_power(
      model, [&](double v) { return power(curve, options.evaluator, v); },
      breaks, options.abs_tolerance);
  const double plateau =
      curve.rated_power() *
      (cdf(model, curve.cut_out()) - cdf(model, curve.rated_speed()));
  return to_naep_units(ramp + plateau, options.tau_hours, curve.rated_power());
}

double naep(const WeibullModel& model,
            const std::function<double(double)>& power_kw,
            std::span<const double> breakpoints, double capacity_kw,
            const NaepOptions& options) {
  if (!(capacity_kw > 0.0)) {
    throw DomainError(fmt::format("capacity {} kW must be > 0", capacity_kw));
  }
  const double expected =
      expected_power(model, power_kw, breakpoints, options.abs_tolerance);
  return to_naep_units(expected, options.tau_hours, capacity_kw);
}

SiteMetrics site_metrics(const WeibullModel& model, const PowerCurve& curve,
                         const MetricsOptions& options) {
  SiteMetrics m;
  m.wpd = wind_power_density(model, options.air_density);
  m.p_exceed = exceedance_probability(model, options.threshold_speed);
  m.naep = naep(model, curve,
                {.evaluator = options.evaluator, .tau_hours = options.tau_hours});
  m.air_density = options.air_density;
  m.hours_per_year = options.tau_hours;
  m.threshold_speed = options.threshold_speed;
  return m;
}

}  // namespace windres
