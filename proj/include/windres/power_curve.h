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

#ifndef WINDRES_POWER_CURVE_H_
#define WINDRES_POWER_CURVE_H_

#include <array>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

namespace windres {

struct CurvePoint {
  double speed;  // m/s
  double power;  // kW
};

// Coefficients a_1..a_6 of sum a_n (v - cut_in)^n on [cut_in, rated_speed).
using PolynomialCoeffs = std::array<double, 6>;

enum class CurveEvaluator { kTabular, kPolynomial };

// Turbine power curve: tabulated points plus derived operating limits.
//
// The tabulated form is authoritative. cut_in is the last zero-power node
// before output starts, rated_speed the first node reaching rated power and
// cut_out the final node. Construction enforces: first point (0, 0),
// strictly increasing speeds, nondecreasing powers bounded by rated power,
// and rated power held from rated_speed through cut_out.
class PowerCurve {
 public:
  explicit PowerCurve(std::vector<CurvePoint> points,
                      std::optional<PolynomialCoeffs> poly = std::nullopt);

  // The 23-point 1 MWp reference curve with its sixth-order fit.
  static const PowerCurve& standard();

  // Two-column CSV with header `speed_mps,power_kw`.
  static PowerCurve load_csv(const std::filesystem::path& path);

  std::span<const CurvePoint> points() const { return points_; }
  double cut_in() const { return cut_in_; }
  double rated_speed() const { return rated_speed_; }
  double cut_out() const { return cut_out_; }
  double rated_power() const { return rated_power_; }
  const std::optional<PolynomialCoeffs>& poly_coeffs() const { return poly_; }

 private:
  std::vector<CurvePoint> points_;
  std::optional<PolynomialCoeffs> poly_;
  double cut_in_ = 0.0;
  double rated_speed_ = 0.0;
  double cut_out_ = 0.0;
  double rated_power_ = 0.0;
};

// Piecewise-linear interpolation of the table. 0 at or below cut-in and
// above cut-out, rated power on [rated_speed, cut_out].
double power_tabular(const PowerCurve& curve, double v);

// Polynomial branch below rated speed, clamped to [0, rated power]; same
// plateau and shutdown behaviour as power_tabular. UsageError if the curve
// carries no coefficients.
double power_polynomial(const PowerCurve& curve, double v);

double power(const PowerCurve& curve, CurveEvaluator evaluator, double v);

struct CurveFitErrors {
  double mad = 0.0;   // kW
  double rmse = 0.0;  // kW
  double max_abs_deviation = 0.0;
  double argmax_speed = 0.0;
};

// Deviations of power_polynomial from every tabulated point.
CurveFitErrors fit_errors(const PowerCurve& curve);

}  // namespace windres

#endif  // WINDRES_POWER_CURVE_H_
