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

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

#include "windres/error.h"

namespace windres {

namespace {

[[noreturn]] void rethrow_with_station(const std::string& key) {
  const std::string prefix = fmt::format("station '{}': ", key);
  try {
    throw;
  } catch (const ConvergenceError& e) {
    throw ConvergenceError(prefix + e.what(), e.last_iterate(), e.last_residual());
  } catch (const AccuracyError& e) {
    throw AccuracyError(prefix + e.what(), e.estimate(), e.error_estimate());
  } catch (const Error& e) {
    throw Error(e.kind(), prefix + e.what());
  }
}

void fill_model_metrics(SiteReport& report, const PowerCurve& curve,
                        const AnalysisConfig& config) {
  report.speeds = characteristic_speeds(report.model);
  report.metrics = site_metrics(report.model, curve, config.metrics);
  report.corrected = correct_metrics(report.metrics, report.meta.altitude);
}

}  // namespace

SiteReport analyze_station(const ObservationSeries& series,
                           const StationMeta& meta, const PowerCurve& curve,
                           const AnalysisConfig& config) {
  try {
    const std::vector<double> speeds = series.speeds();
    SiteReport report;
    report.meta = meta;
    report.fit = fit_mle(speeds, config.fit);
    // Rows dropped at ingest count against the fit too.
    report.fit->n_dropped += series.n_dropped;
    report.model = report.fit->model;
    report.arithmetic_mean = report.fit->arithmetic_mean;
    report.validation = validate_fit(*report.fit, config.validation_threshold);
    fill_model_metrics(report, curve, config);

    const std::vector<double> directions = series.directions();
    const bool any_direction =
        std::any_of(directions.begin(), directions.end(),
                    [](double d) { return !std::isnan(d); });
    if (any_direction) {
      try {
        RoseSummary rose;
        rose.rose = bin_directions(directions, speeds, config.rose);
        rose.dominant = dominant_directions(rose.rose, config.secondary_threshold);
        report.rose = rose;
      } catch (const InsufficientDataError&) {
        // Every direction belonged to a calm; leave the rose out.
      }
    }
    report.histogram = histogram(speeds, config.histogram_bin_width);
    return report;
  } catch (const Error&) {
    rethrow_with_station(meta.station_key);
  }
}

SiteReport analyze_model(const StationMeta& meta, const WeibullModel& model,
                         const PowerCurve& curve, const AnalysisConfig& config,
                         std::optional<double> arithmetic_mean) {
  try {
    SiteReport report;
    report.meta = meta;
    report.model = model;
    report.arithmetic_mean = arithmetic_mean;
    fill_model_metrics(report, curve, config);
    if (arithmetic_mean) {
      report.validation = validate_means(report.speeds.mean, *arithmetic_mean,
                                         config.validation_threshold);
    }
    return report;
  } catch (const Error&) {
    rethrow_with_station(meta.station_key);
  }
}

TableId parse_table_id(std::string_view name) {
  if (name == "params") return TableId::kParams;
  if (name == "speeds") return TableId::kSpeeds;
  if (name == "metrics") return TableId::kMetrics;
  if (name == "corrected") return TableId::kCorrected;
  throw UsageError(fmt::format(
      "unknown table '{}' (expected params, speeds, metrics or corrected)", name));
}

std::string_view table_name(TableId id) {
  switch (id) {
    case TableId::kParams:
      return "params";
    case TableId::kSpeeds:
      return "speeds";
    case TableId::kMetrics:
      return "metrics";
    case TableId::kCorrected:
      return "corrected";
  }
  return "";
}

std::string format_number(double value) {
  if (!std::isfinite(value)) return "nan";
  if (value == 0.0) return "0";
  return fmt::format("{:.6g}", value);
}

Table report_table(std::span<const SiteReport> reports, TableId id) {
  if (reports.empty()) {
    throw UsageError("report_table: no reports to tabulate");
  }
  Table t;
  switch (id) {
    case TableId::kParams:
      t.title = "Weibull parameters and mean wind speeds";
      t.header = {"station", "k", "c_mps", "distribution_mean_mps",
                  "arithmetic_mean_mps"};
      break;
    case TableId::kSpeeds:
      t.title = "Weibull characteristic wind speeds";
      t.header = {"station", "mode_mps", "median_mps", "mean_mps",
                  "max_energy_mps"};
      break;
    case TableId::kMetrics:
      t.title = "Power generation metrics";
      t.header = {"station", "wpd_w_per_m2",
                  fmt::format("p_exceed_{}mps_pct",
                              format_number(reports[0].metrics.threshold_speed)),
                  "naep_gwh_per_mwp_year"};
      break;
    case TableId::kCorrected:
      t.title = "Altitude-corrected density and power metrics";
      t.header = {"station", "rho_kg_per_m3", "sigma", "wpd_corrected_w_per_m2",
                  "naep_corrected_gwh_per_mwp_year"};
      break;
  }
  for (const SiteReport& r : reports) {
    std::vector<std::string> row{r.meta.name.empty() ? r.meta.station_key
                                                     : r.meta.name};
    switch (id) {
      case TableId::kParams:
        row.push_back(format_number(r.model.shape()));
        row.push_back(format_number(r.model.scale()));
        row.push_back(format_number(r.speeds.mean));
        row.push_back(r.arithmetic_mean ? format_number(*r.arithmetic_mean) : "");
        break;
      case TableId::kSpeeds:
        row.push_back(format_number(r.speeds.mode));
        row.push_back(format_number(r.speeds.median));
        row.push_back(format_number(r.speeds.mean));
        row.push_back(format_number(r.speeds.max_energy));
        break;
      case TableId::kMetrics:
        row.push_back(format_number(r.metrics.wpd));
        row.push_back(format_number(100.0 * r.metrics.p_exceed));
        row.push_back(format_number(r.metrics.naep));
        break;
      case TableId::kCorrected:
        row.push_back(format_number(r.corrected.rho));
        row.push_back(format_number(r.corrected.sigma_density));
        row.push_back(format_number(r.corrected.wpd_corrected));
        row.push_back(format_number(r.corrected.naep_corrected));
        break;
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string render_csv(const Table& table) {
  std::string out;
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  emit(table.header);
  for (const auto& row : table.rows) emit(row);
  return out;
}

std::string render_text(const Table& table) {
  std::vector<std::size_t> width(table.header.size(), 0);
  auto measure = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], cells[i].size());
    }
  };
  measure(table.header);
  for (const auto& row : table.rows) measure(row);

  std::string out = table.title + "\n";
  auto emit = [&](const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i == 0) {
        line += fmt::format("{:<{}}", cells[i], width[i]);
      } else {
        line += fmt::format("  {:>{}}", cells[i], width[i]);
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  };
  emit(table.header);
  std::size_t total = 0;
  for (std::size_t w : width) total += w + 2;
  out += std::string(total - 2, '-') + '\n';
  for (const auto& row : table.rows) emit(row);
  return out;
}

}  // namespace windres
