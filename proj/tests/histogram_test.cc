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

#include "windres/histogram.h"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracle.h"
#include "windres/error.h"
#include "windres/svg.h"
#include "windres/weibull.h"

namespace windres {
namespace {

TEST(HistogramTest, SingleBin) {
  const Histogram h = histogram(std::vector<double>{0.25, 0.25}, 0.5);
  ASSERT_EQ(h.bins.size(), 1u);
  EXPECT_EQ(h.bins[0].lower, 0.0);
  EXPECT_EQ(h.bins[0].upper, 0.5);
  EXPECT_EQ(h.bins[0].count, 2u);
  EXPECT_DOUBLE_EQ(h.bins[0].density, 2.0);
}

TEST(HistogramTest, UniformDensity) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> xs(200000);
  for (double& x : xs) x = u(gen);
  const Histogram h = histogram(xs, 0.5);
  ASSERT_EQ(h.bins.size(), 2u);
  EXPECT_NEAR(h.bins[0].density, 1.0, 0.01);
  EXPECT_NEAR(h.bins[1].density, 1.0, 0.01);
}

TEST(HistogramTest, MatchesPdfForLargeSample) {
  const double k = 2.16538, c = 6.38352;
  const auto xs = sample(WeibullModel(k, c), 1000000, 17);
  const Histogram h = histogram(xs, 0.5);
  double worst = 0.0;
  for (const HistogramBin& b : h.bins) {
    const double centre = 0.5 * (b.lower + b.upper);
    worst = std::max(worst, std::abs(b.density - oracle::weibull_pdf(k, c, centre)));
  }
  EXPECT_LT(worst, 0.01);
}

TEST(HistogramTest, NormalizedAndContiguous) {
  const auto xs = sample(WeibullModel(1.7, 4.0), 5000, 4);
  for (double w : {0.1, 0.5, 1.0, 2.5}) {
    const Histogram h = histogram(xs, w);
    double total = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < h.bins.size(); ++i) {
      total += h.bins[i].density * w;
      count += h.bins[i].count;
      EXPECT_DOUBLE_EQ(h.bins[i].lower, i * w);
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
    EXPECT_EQ(count, xs.size());
  }
}

TEST(HistogramTest, Errors) {
  EXPECT_THROW(histogram(std::vector<double>{}, 0.5), InsufficientDataError);
  EXPECT_THROW(histogram(std::vector<double>{1.0}, 0.0), DomainError);
  EXPECT_THROW(histogram(std::vector<double>{1.0}, -0.5), DomainError);
  EXPECT_THROW(histogram(std::vector<double>{1.0, -2.0}, 0.5), DomainError);
}

TEST(SvgTest, DeterministicAndWellFormed) {
  const auto xs = sample(WeibullModel(2.0, 5.0), 2000, 8);
  const Histogram h = histogram(xs, 0.5);
  const std::string a = histogram_svg(h, WeibullModel(2.0, 5.0), "A & B");
  EXPECT_EQ(a, histogram_svg(h, WeibullModel(2.0, 5.0), "A & B"));
  EXPECT_EQ(a.rfind("<svg", 0), 0u);
  EXPECT_NE(a.find("</svg>"), std::string::npos);
  EXPECT_NE(a.find("A &amp; B"), std::string::npos);
  EXPECT_NE(a.find("<polyline"), std::string::npos);
  EXPECT_EQ(histogram_svg(h, std::nullopt, "x").find("<polyline"), std::string::npos);
}

}  // namespace
}  // namespace windres
