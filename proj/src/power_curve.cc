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

#include "windres/power_curve.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>

#include <fmt/core.h>

#include "windres/csv.h"
#include "windres/error.h"

namespace windres {

namespace {

std::vector<CurvePoint> standard_points() {
  return {
      {0.0, 0.0},       {3.5, 0.0},       {4.0, 24.0},      {4.5, 44.0},
      {5.0, 69.33},     {5.5, 100.0},     {6.0, 136.67},    {6.5, 179.33},
      {7.0, 229.33},    {7.5, 285.33},    {8.0, 352.0},     {8.5, 429.33},
      {9.0, 516.0},     {9.5, 617.67},    {10.0, 719.33},   {10.5, 807.33},
      {11.0, 894.67},   {11.5, 934.0},    {12.0, 973.33},   {12.5, 984.67},
      {13.0, 996.0},    {13.5, 1000.0},   {25.0, 1000.0},
  };
}

constexpr PolynomialCoeffs kStandardPoly = {
    11.629989, 51.785673, -26.361878, 6.651802, -0.696387, 0.025188,
};

void check_speed(double v) {
  if (!(v >= 0.0)) {
    throw DomainError(fmt::format("power curve: speed {} must be >= 0", v));
  }
}

}  // namespace

PowerCurve::PowerCurve(std::vector<CurvePoint> points,
                       std::optional<PolynomialCoeffs> poly)
    : points_(std::move(points)), poly_(poly) {
  if (points_.size() < 3) {
    throw SchemaError("power curve: need at least 3 points");
  }
  if (points_.front().speed != 0.0 || points_.front().power != 0.0) {
    throw SchemaError("power curve: first point must be (0, 0)");
  }
  for (std::size_t i = 1; i < points_.size(); ++i) {
    const CurvePoint& a = points_[i - 1];
    const CurvePoint& b = points_[i];
    if (!(b.speed > a.speed)) {
      throw SchemaError(fmt::format(
          "power curve: speeds must increase strictly (row {}: {} after {})",
          i + 1, b.speed, a.speed));
    }
    if (b.power < a.power) {
      throw SchemaError(fmt::format(
          "power curve: power decreases at {} m/s ({} < {})", b.speed,
          b.power, a.power));
    }
  }
  rated_power_ = points_.back().power;
  if (!(rated_power_ > 0.0)) {
    throw SchemaError("power curve: rated power must be > 0");
  }
  cut_out_ = points_.back().speed;
  std::size_t first_positive = 0;
  while (points_[first_positive].power == 0.0) ++first_positive;
  cut_in_ = points_[first_positive - 1].speed;
  auto rated = std::find_if(points_.begin(), points_.end(), [&](const auto& p) {
    return p.power == rated_power_;
  });
  rated_speed_ = rated->speed;
}

const PowerCurve& PowerCurve::standard() {
  static const PowerCurve curve(standard_points(), kStandardPoly);
  return curve;
}

PowerCurve PowerCurve::load_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError(fmt::format("cannot open power curve '{}'", path.string()));
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw SchemaError(fmt::format("'{}': empty file", path.string()));
  }
  const auto header = csv::split(csv::chomp(line));
  const char* expected[] = {"speed_mps", "power_kw"};
  if (header.size() != 2) {
    throw SchemaError(fmt::format(
        "'{}': header must be speed_mps,power_kw", path.string()));
  }
  for (std::size_t i = 0; i < 2; ++i) {
    if (csv::trim(header[i]) != expected[i]) {
      throw SchemaError(fmt::format("'{}': column {} is '{}', expected '{}'",
                                    path.string(), i + 1,
                                    csv::trim(header[i]), expected[i]));
    }
  }
  std::vector<CurvePoint> points;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto row = csv::chomp(line);
    if (csv::trim(row).empty()) continue;
    const auto fields = csv::split(row);
    std::optional<double> v, p;
    if (fields.size() == 2) {
      v = csv::parse_double(fields[0]);
      p = csv::parse_double(fields[1]);
    }
    if (!v || !p) {
      throw SchemaError(
          fmt::format("'{}' line {}: malformed row", path.string(), line_no));
    }
    points.push_back({*v, *p});
  }
  return PowerCurve(std::move(points));
}

double power_tabular(const PowerCurve& curve, double v) {
  check_speed(v);
  if (v <= curve.cut_in() || v > curve.cut_out()) return 0.0;
  if (v >= curve.rated_speed()) return curve.rated_power();
  const auto pts = curve.points();
  auto upper = std::upper_bound(
      pts.begin(), pts.end(), v,
      [](double x, const CurvePoint& p) { return x < p.speed; });
  const CurvePoint& b = *upper;
  const CurvePoint& a = *(upper - 1);
  if (v == a.speed) return a.power;
  const double t = (v - a.speed) / (b.speed - a.speed);
  return a.power + t * (b.power - a.power);
}

double power_polynomial(const PowerCurve& curve, double v) {
  check_speed(v);
  if (!curve.poly_coeffs()) {
    throw UsageError("power curve has no polynomial coefficients");
  }
  if (v < curve.cut_in() || v > curve.cut_out()) return 0.0;
  if (v >= curve.rated_speed()) return curve.rated_power();
  const PolynomialCoeffs& a = *curve.poly_coeffs();
  const double x = v - curve.cut_in();
  double acc = 0.0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = (acc + *it) * x;
  return std::clamp(acc, 0.0, curve.rated_power());
}

double power(const PowerCurve& curve, CurveEvaluator evaluator, double v) {
  return evaluator == CurveEvaluator::kTabular ? power_tabular(curve, v)
                                               : power_polynomial(curve, v);
}

CurveFitErrors fit_errors(const PowerCurve& curve) {
  CurveFitErrors out;
  double abs_sum = 0.0;
  double sq_sum = 0.0;
  for (const CurvePoint& p : curve.points()) {
    const double dev = power_polynomial(curve, p.speed) - p.power;
    abs_sum += std::abs(dev);
    sq_sum += dev * dev;
    if (std::abs(dev) > out.max_abs_deviation) {
      out.max_abs_deviation = std::abs(dev);
      out.argmax_speed = p.speed;
    }
  }
  const double n = static_cast<double>(curve.points().size());
  out.mad = abs_sum / n;
  out.rmse = std::sqrt(sq_sum / n);
  return out;
}

}  // namespace windres
