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

#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "windres/csv.h"
#include "windres/error.h"
#include "windres/parallel.h"
#include "windres/quadrature.h"
#include "windres/random.h"

namespace windres {
namespace {

TEST(QuadratureTest, Polynomials) {
  EXPECT_NEAR(integrate([](double x) { return x * x; }, 0.0, 3.0).value, 9.0, 1e-12);
  EXPECT_NEAR(integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi)
                  .value,
              2.0, 1e-12);
  EXPECT_EQ(integrate([](double) { return 0.0; }, 1.0, 2.0).value, 0.0);
}

TEST(QuadratureTest, ReportsErrorEstimate) {
  const QuadratureResult r = integrate([](double x) { return std::exp(-x); }, 0.0, 40.0);
  EXPECT_NEAR(r.value, 1.0 - std::exp(-40.0), 1e-12);
  EXPECT_LE(r.error_estimate, 1e-9);
}

TEST(QuadratureTest, UnreachableToleranceIsAccuracyError) {
  QuadratureOptions opts;
  opts.abs_tolerance = 1e-30;
  opts.max_depth = 1;
  try {
    integrate([](double x) { return 1.0 / std::sqrt(x + 1e-12); }, 0.0, 1.0, opts);
    FAIL();
  } catch (const AccuracyError& e) {
    EXPECT_TRUE(std::isfinite(e.estimate()));
    EXPECT_GT(e.error_estimate(), 0.0);
  }
}

TEST(CsvTest, SplitTrimParse) {
  const auto f = csv::split("a, b ,,c");
  ASSERT_EQ(f.size(), 4u);
  EXPECT_EQ(csv::trim(f[1]), "b");
  EXPECT_EQ(f[2], "");
  EXPECT_EQ(csv::chomp("x,y\r"), "x,y");
  EXPECT_EQ(csv::parse_double(" 3.25 "), 3.25);
  EXPECT_FALSE(csv::parse_double("3.25x"));
  EXPECT_FALSE(csv::parse_double(""));
  EXPECT_FALSE(csv::parse_double("inf"));
  EXPECT_FALSE(csv::parse_double("nan"));
}

TEST(RngTest, UnitIntervalAndReproducible) {
  Rng a(5), b(5);
  for (int i = 0; i < 10000; ++i) {
    const double x = a();
    ASSERT_GE(x, 0.0);
    ASSERT_LT(x, 1.0);
    ASSERT_EQ(x, b());
  }
}

TEST(ParallelMapTest, OrderedResults) {
  for (unsigned threads : {1u, 3u, 8u}) {
    const auto out = parallel_map(100, threads, [](std::size_t i) { return i * i; });
    ASSERT_EQ(out.size(), 100u);
    for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], i * i);
  }
}

TEST(ParallelMapTest, LowestIndexErrorWins) {
  try {
    parallel_map(50, 4, [](std::size_t i) -> int {
      if (i == 7 || i == 30) throw std::runtime_error(std::to_string(i));
      return 0;
    });
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "7");
  }
}

TEST(ErrorTest, KindsAndNames) {
  EXPECT_EQ(DomainError("x").kind(), ErrorKind::kDomain);
  EXPECT_EQ(SchemaError("x").kind(), ErrorKind::kSchema);
  EXPECT_STREQ(to_string(ErrorKind::kIo), "I/O error");
  const ConvergenceError c("x", 1.5, 2e-3);
  EXPECT_EQ(c.last_iterate(), 1.5);
  EXPECT_EQ(c.last_residual(), 2e-3);
}

}  // namespace
}  // namespace windres
