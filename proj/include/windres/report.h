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

#ifndef WINDRES_REPORT_H_
#define WINDRES_REPORT_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "windres/atmosphere.h"
#include "windres/estimation.h"
#include "windres/histogram.h"
#include "windres/metrics.h"
#include "windres/observations.h"
#include "windres/power_curve.h"
#include "windres/stations.h"
#include "windres/weibull.h"
#include "windres/wind_rose.h"

namespace windres {

struct AnalysisConfig {
  MetricsOptions metrics;
  FitOptions fit;
  double validation_threshold = 0.02;
  double histogram_bin_width = kDefaultBinWidth;
  RoseOptions rose;
  double secondary_threshold = 0.15;
};

struct RoseSummary {
  WindRose rose;
  DominantDirections dominant;
};

// Everything known about one station. Reports built from published Weibull
// parameters have no fit, rose or histogram; arithmetic_mean then holds the
// published value when one exists.
struct SiteReport {
  StationMeta meta;
  WeibullModel model{1.0, 1.0};
  std::optional<FitResult> fit;
  std::optional<double> arithmetic_mean;
  std::optional<ValidationVerdict> validation;
  CharacteristicSpeeds speeds;
  SiteMetrics metrics;
  CorrectedMetrics corrected;
  std::optional<RoseSummary> rose;
  std::optional<Histogram> histogram;
};

// fit -> characteristic speeds -> metrics -> altitude correction -> rose ->
// histogram. Errors are rethrown with the station key in the message. A
// series without any usable direction yields a report without a rose.
SiteReport analyze_station(const ObservationSeries& series,
                           const StationMeta& meta, const PowerCurve& curve,
                           const AnalysisConfig& config = {});

// Same pipeline from a known model (no observations).
SiteReport analyze_model(const StationMeta& meta, const WeibullModel& model,
                         const PowerCurve& curve, const AnalysisConfig& config = {},
                         std::optional<double> arithmetic_mean = std::nullopt);

enum class TableId { kParams, kSpeeds, kMetrics, kCorrected };

// "params", "speeds", "metrics" or "corrected"; UsageError otherwise.
TableId parse_table_id(std::string_view name);
std::string_view table_name(TableId id);

// Cells are preformatted strings so every rendering shows identical numbers.
struct Table {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Numbers are printed with 6 significant digits. UsageError on an empty
// report list. Rows follow input order.
Table report_table(std::span<const SiteReport> reports, TableId id);

std::string render_csv(const Table& table);
std::string render_text(const Table& table);

// 6-significant-digit number formatting used in all tables.
std::string format_number(double value);

}  // namespace windres

#endif  // WINDRES_REPORT_H_
