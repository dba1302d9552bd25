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

#include "windres/report.h"

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "windres/error.h"
#include "windres/reproduce.h"
#include "windres/svg.h"

namespace windres {
namespace {

ObservationSeries synthetic_series(const std::string& key, const WeibullModel& m,
                                   std::size_t n, std::uint64_t seed,
                                   double direction = 160.0) {
  ObservationSeries s;
  s.station_key = key;
  const auto xs = sample(m, n, seed);
  for (double v : xs) s.records.push_back({Timestamp{}, v, direction});
  s.n_raw = n;
  return s;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

TEST(AnalyzeStationTest, ThumraitLikeSpeeds) {
  const StationRegistry registry = StationRegistry::builtin();
  const ObservationSeries s =
      synthetic_series("thumrait", WeibullModel(2.16538, 6.38352), 500000, 31);
  const SiteReport r =
      analyze_station(s, registry.at("thumrait"), PowerCurve::standard());
  EXPECT_NEAR(r.speeds.mode, 4.79514, 0.01 * 4.79514);
  EXPECT_NEAR(r.speeds.median, 5.38953, 0.01 * 5.38953);
  EXPECT_NEAR(r.speeds.mean, 5.65326, 0.01 * 5.65326);
  EXPECT_NEAR(r.speeds.max_energy, 8.63516, 0.01 * 8.63516);
  ASSERT_TRUE(r.fit && r.validation && r.rose && r.histogram);
  EXPECT_TRUE(r.validation->passed);
  EXPECT_EQ(r.rose->dominant.compass_label, "SSE");
  EXPECT_EQ(r.speeds.mean, characteristic_speeds(r.model).mean);
  EXPECT_LT(r.corrected.rho, 1.225);
}

TEST(AnalyzeStationTest, IdenticalSpeedsNameTheStation) {
  ObservationSeries s;
  s.station_key = "flat";
  for (int i = 0; i < 10; ++i) s.records.push_back({Timestamp{}, 4.0, 90.0});
  StationMeta meta;
  meta.station_key = "flat";
  try {
    analyze_station(s, meta, PowerCurve::standard());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDegenerate);
    EXPECT_NE(std::string(e.what()).find("flat"), std::string::npos);
  }
}

TEST(AnalyzeStationTest, SeaLevelCorrectionIsIdentity) {
  StationMeta meta;
  meta.station_key = "coast";
  const SiteReport r = analyze_station(
      synthetic_series("coast", WeibullModel(2.0, 6.0), 5000, 3),
      meta, PowerCurve::standard());
  EXPECT_EQ(r.corrected.wpd_corrected, r.metrics.wpd);
  EXPECT_EQ(r.corrected.naep_corrected, r.metrics.naep);
}

TEST(AnalyzeStationTest, NoDirectionsMeansNoRose) {
  StationMeta meta;
  meta.station_key = "x";
  const SiteReport r = analyze_station(
      synthetic_series("x", WeibullModel(2.0, 6.0), 1000, 3, NAN), meta,
      PowerCurve::standard());
  EXPECT_FALSE(r.rose.has_value());
  EXPECT_TRUE(r.histogram.has_value());
}

TEST(ReportTableTest, ThumraitSpeedsRow) {
  const StationRegistry registry = StationRegistry::builtin();
  const SiteReport r = analyze_model(registry.at("thumrait"),
                                     WeibullModel(2.16538, 6.38352),
                                     PowerCurve::standard());
  const Table t = report_table(std::span(&r, 1), TableId::kSpeeds);
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.rows[0][0], "Thumrait");
  const double expected[] = {4.79514, 5.38953, 5.65326, 8.63516};
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(std::stod(t.rows[0][i + 1]), expected[i], 1e-3);
  }
  EXPECT_EQ(t.header[1], "mode_mps");
}

TEST(ReportTableTest, EmptyAndUnknown) {
  EXPECT_THROW(report_table({}, TableId::kParams), UsageError);
  EXPECT_THROW(parse_table_id("weather"), UsageError);
  for (TableId id : {TableId::kParams, TableId::kSpeeds, TableId::kMetrics,
                     TableId::kCorrected}) {
    EXPECT_EQ(parse_table_id(table_name(id)), id);
  }
}

TEST(ReportTableTest, RowsInInputOrderAndRenderingsAgree) {
  const StationRegistry registry = StationRegistry::builtin();
  std::vector<SiteReport> reports;
  for (const char* key : {"saiq", "seeb"}) {
    const auto& p = *std::find_if(published_stations().begin(),
                                  published_stations().end(),
                                  [&](const auto& s) { return s.key == key; });
    reports.push_back(analyze_model(registry.at(key), WeibullModel(p.k, p.c),
                                    PowerCurve::standard(), {}, p.arithmetic_mean));
  }
  for (TableId id : {TableId::kParams, TableId::kSpeeds, TableId::kMetrics,
                     TableId::kCorrected}) {
    const Table t = report_table(reports, id);
    ASSERT_EQ(t.rows.size(), 2u);
    EXPECT_EQ(t.rows[0][0], "Saiq");
    EXPECT_EQ(t.rows[1][0], "Seeb");

    // Every CSV cell appears verbatim in the aligned text.
    const std::string csv = render_csv(t);
    const std::string text = render_text(t);
    std::istringstream lines(csv);
    std::string line;
    while (std::getline(lines, line)) {
      for (const std::string& cell : split_csv_line(line)) {
        EXPECT_NE(text.find(cell), std::string::npos) << cell;
      }
    }
  }
}

TEST(ReportTableTest, MetricsHeaderCarriesThreshold) {
  AnalysisConfig config;
  config.metrics.threshold_speed = 7.5;
  StationMeta meta;
  meta.station_key = "x";
  const SiteReport r =
      analyze_model(meta, WeibullModel(2.0, 6.0), PowerCurve::standard(), config);
  const Table t = report_table(std::span(&r, 1), TableId::kMetrics);
  EXPECT_EQ(t.header[2], "p_exceed_7.5mps_pct");
  EXPECT_EQ(t.rows[0][0], "x");
}

TEST(FormatNumberTest, SixSignificantDigits) {
  EXPECT_EQ(format_number(4.795143), "4.79514");
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(NAN), "nan");
  EXPECT_EQ(format_number(196.04812), "196.048");
  EXPECT_EQ(format_number(5.519e-6), "5.519e-06");
}

TEST(RoseSvgTest, Deterministic) {
  const WindRose rose = bin_directions(std::vector<double>{10, 20, 20, 160, 350});
  const std::string a = rose_svg(rose, "r");
  EXPECT_EQ(a, rose_svg(rose, "r"));
  EXPECT_NE(a.find("<path"), std::string::npos);
}

}  // namespace
}  // namespace windres
