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

#include <cmath>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "oracle.h"
#include "windres/error.h"

namespace windres {
namespace {

const PowerCurve& curve() { return PowerCurve::standard(); }

TEST(PowerCurveTest, StandardShape) {
  EXPECT_EQ(curve().points().size(), 23u);
  EXPECT_EQ(curve().cut_in(), 3.5);
  EXPECT_EQ(curve().rated_speed(), 13.5);
  EXPECT_EQ(curve().cut_out(), 25.0);
  EXPECT_EQ(curve().rated_power(), 1000.0);
  ASSERT_TRUE(curve().poly_coeffs().has_value());
}

TEST(PowerTabularTest, Examples) {
  EXPECT_EQ(power_tabular(curve(), 3.5), 0.0);
  EXPECT_EQ(power_tabular(curve(), 13.5), 1000.0);
  EXPECT_NEAR(power_tabular(curve(), 10.25), 0.5 * (719.33 + 807.33), 1e-9);
  EXPECT_NEAR(power_tabular(curve(), 10.25), 763.33, 1e-9);
  EXPECT_THROW(power_tabular(curve(), -0.5), DomainError);
}

TEST(PowerTabularTest, ExactAtNodes) {
  for (const CurvePoint& p : curve().points()) {
    EXPECT_EQ(power_tabular(curve(), p.speed), p.power) << "v=" << p.speed;
  }
}

TEST(PowerTabularTest, MatchesOracleInterpolation) {
  for (double v = 0.0; v <= 25.0; v += 0.0137) {
    EXPECT_NEAR(power_tabular(curve(), v),
                oracle::interpolate(oracle::curve_speeds(), oracle::curve_powers(), v),
                1e-9)
        << "v=" << v;
  }
}

TEST(PowerTabularTest, MonotoneOnOperatingRange) {
  double previous = 0.0;
  for (int i = 0; i <= 25000; ++i) {
    const double p = power_tabular(curve(), i * 1e-3);
    EXPECT_GE(p, previous);
    previous = p;
  }
}

TEST(PowerPolynomialTest, Examples) {
  EXPECT_NEAR(power_polynomial(curve(), 11.0), 882.80, 0.01);
  EXPECT_EQ(power_polynomial(curve(), 3.5), 0.0);
  EXPECT_EQ(power_polynomial(curve(), 20.0), 1000.0);
  EXPECT_THROW(power_polynomial(curve(), -1.0), DomainError);
}

TEST(PowerPolynomialTest, MatchesDirectSum) {
  const auto& a = *curve().poly_coeffs();
  for (double v = 3.6; v < 13.5; v += 0.1) {
    double direct = 0.0;
    for (int n = 1; n <= 6; ++n) direct += a[n - 1] * std::pow(v - 3.5, n);
    direct = std::clamp(direct, 0.0, 1000.0);
    EXPECT_NEAR(power_polynomial(curve(), v), direct, 1e-9);
  }
}

TEST(PowerPolynomialTest, NoCoefficientsIsUsageError) {
  const PowerCurve plain({{0, 0}, {3, 0}, {10, 500}, {20, 500}});
  EXPECT_THROW(power_polynomial(plain, 5.0), UsageError);
  EXPECT_THROW(fit_errors(plain), UsageError);
}

TEST(PowerCurveTest, BothEvaluatorsBoundedAndAgree) {
  for (int i = 0; i <= 25000; ++i) {
    const double v = i * 1e-3;
    const double t = power(curve(), CurveEvaluator::kTabular, v);
    const double p = power(curve(), CurveEvaluator::kPolynomial, v);
    ASSERT_GE(t, 0.0);
    ASSERT_LE(t, 1000.0);
    ASSERT_GE(p, 0.0);
    ASSERT_LE(p, 1000.0);
    if (v >= 3.5 && v <= 13.5) {
      ASSERT_LE(std::abs(t - p), 12.0) << "v=" << v;
    }
  }
}

TEST(PowerCurveTest, PlateauAndShutdown) {
  for (double v : {13.5, 14.0, 18.7, 24.999, 25.0}) {
    EXPECT_EQ(power_tabular(curve(), v), 1000.0);
    EXPECT_EQ(power_polynomial(curve(), v), 1000.0);
  }
  for (double v : {25.0001, 30.0, 60.0}) {
    EXPECT_EQ(power_tabular(curve(), v), 0.0);
    EXPECT_EQ(power_polynomial(curve(), v), 0.0);
  }
}

TEST(FitErrorsTest, PublishedValues) {
  const CurveFitErrors e = fit_errors(curve());
  EXPECT_NEAR(e.mad, 3.39, 0.05);
  EXPECT_NEAR(e.rmse, 4.51, 0.05);
  EXPECT_NEAR(e.max_abs_deviation, 11.87, 0.05);
  EXPECT_EQ(e.argmax_speed, 11.0);
}

TEST(FitErrorsTest, MatchesOracle) {
  const auto& a = *curve().poly_coeffs();
  const auto& xs = oracle::curve_speeds();
  const auto& ys = oracle::curve_powers();
  double abs_sum = 0.0, sq_sum = 0.0;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    double p = 0.0;
    if (xs[j] >= 13.5) {
      p = 1000.0;
    } else if (xs[j] > 3.5) {
      for (int n = 1; n <= 6; ++n) p += a[n - 1] * std::pow(xs[j] - 3.5, n);
    }
    abs_sum += std::abs(p - ys[j]);
    sq_sum += (p - ys[j]) * (p - ys[j]);
  }
  const CurveFitErrors e = fit_errors(curve());
  EXPECT_NEAR(e.mad, abs_sum / 23.0, 1e-9);
  EXPECT_NEAR(e.rmse, std::sqrt(sq_sum / 23.0), 1e-9);
}

TEST(PowerCurveTest, ConstructionValidates) {
  EXPECT_THROW(PowerCurve({{0, 0}, {5, 10}}), SchemaError);
  EXPECT_THROW(PowerCurve({{1, 0}, {5, 10}, {9, 20}}), SchemaError);
  EXPECT_THROW(PowerCurve({{0, 0}, {5, 10}, {5, 20}}), SchemaError);
  EXPECT_THROW(PowerCurve({{0, 0}, {5, 30}, {9, 20}}), SchemaError);
  EXPECT_THROW(PowerCurve({{0, 0}, {5, 0}, {9, 0}}), SchemaError);
}

TEST(PowerCurveTest, LoadCsv) {
  const auto path = std::filesystem::temp_directory_path() / "windres_curve_test.csv";
  {
    std::ofstream out(path);
    out << "speed_mps,power_kw\n0,0\n3,0\n8,300\n12,600\n20,600\n";
  }
  const PowerCurve c = PowerCurve::load_csv(path);
  EXPECT_EQ(c.cut_in(), 3.0);
  EXPECT_EQ(c.rated_speed(), 12.0);
  EXPECT_EQ(c.cut_out(), 20.0);
  EXPECT_EQ(c.rated_power(), 600.0);
  EXPECT_NEAR(power_tabular(c, 10.0), 450.0, 1e-12);
  {
    std::ofstream out(path);
    out << "speed,power_kw\n0,0\n";
  }
  EXPECT_THROW(PowerCurve::load_csv(path), SchemaError);
  std::filesystem::remove(path);
  EXPECT_THROW(PowerCurve::load_csv(path), IoError);
}

}  // namespace
}  // namespace windres
