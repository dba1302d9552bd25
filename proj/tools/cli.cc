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

#include "cli.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "windres/error.h"
#include "windres/estimation.h"
#include "windres/histogram.h"
#include "windres/observations.h"
#include "windres/parallel.h"
#include "windres/power_curve.h"
#include "windres/random.h"
#include "windres/report.h"
#include "windres/reproduce.h"
#include "windres/stations.h"
#include "windres/svg.h"
#include "windres/weibull.h"
#include "windres/wind_rose.h"

namespace windres::cli {

namespace {

struct CommonOptions {
  std::string input;
  std::string station;
  std::string registry;
  std::string curve;
  std::string output;
  std::string format = "csv";
  std::string evaluator = "tabular";
  double tau_hours = kHoursPerYear;
  double density = kSeaLevelDensity;
  double threshold = kDefaultThresholdSpeed;
  unsigned threads = 1;
  bool strict = false;
};

struct GenerateOptions {
  double k = 2.0;
  double c = 6.0;
  std::size_t n = 1000;
  std::uint64_t seed = 1;
  std::string station = "synthetic";
  std::string start = "2000-01-01T00:00:00Z";
  int step_minutes = 60;
  double direction = 200.0;
  double spread = 30.0;
};

std::string fmt9(double v) {
  if (!std::isfinite(v)) return "nan";
  if (v == 0.0) return "0";
  return fmt::format("{:.9g}", v);
}

void add_format(CLI::App* cmd, CommonOptions& o,
                const std::vector<std::string>& allowed) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember(allowed))
      ->capture_default_str();
}

void add_output(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--output", o.output, "Write to this file instead of stdout");
}

void add_ingest(CLI::App* cmd, CommonOptions& o, bool input_required) {
  auto* input = cmd->add_option("--input", o.input,
                                "Observation CSV "
                                "(station_key,timestamp_iso8601,speed_mps,"
                                "direction_deg)");
  if (input_required) input->required();
  cmd->add_option("--station", o.station, "Restrict to one station_key");
  cmd->add_flag("--strict", o.strict, "Reject malformed rows instead of counting them");
}

void add_metrics(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--curve", o.curve, "Power curve CSV (speed_mps,power_kw)");
  cmd->add_option("--tau-hours", o.tau_hours, "Hours per year")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--density", o.density, "Air density for WPD (kg/m^3)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--threshold", o.threshold, "Exceedance threshold (m/s)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--evaluator", o.evaluator, "Power curve evaluator")
      ->check(CLI::IsMember({"tabular", "polynomial"}))
      ->capture_default_str();
}

void add_threads(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--threads", o.threads, "Worker threads")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
}

PowerCurve load_curve(const CommonOptions& o) {
  return o.curve.empty() ? PowerCurve::standard() : PowerCurve::load_csv(o.curve);
}

StationRegistry load_registry(const CommonOptions& o) {
  StationRegistry registry = StationRegistry::builtin();
  if (!o.registry.empty()) registry.merge(StationRegistry::load(o.registry));
  return registry;
}

AnalysisConfig analysis_config(const CommonOptions& o) {
  AnalysisConfig config;
  config.metrics.air_density = o.density;
  config.metrics.tau_hours = o.tau_hours;
  config.metrics.threshold_speed = o.threshold;
  config.metrics.evaluator = o.evaluator == "polynomial"
                                 ? CurveEvaluator::kPolynomial
                                 : CurveEvaluator::kTabular;
  return config;
}

std::vector<ObservationSeries> load_series(const CommonOptions& o) {
  IngestOptions ingest;
  ingest.strict = o.strict;
  if (!o.station.empty()) ingest.station = o.station;
  return ingest_all(o.input, ingest);
}

ObservationSeries load_one_series(const CommonOptions& o) {
  IngestOptions ingest;
  ingest.strict = o.strict;
  if (!o.station.empty()) ingest.station = o.station;
  return ingest_observations(o.input, ingest);
}

StationMeta meta_for(const StationRegistry& registry, const std::string& key,
                     std::ostream& err) {
  if (const StationMeta* meta = registry.find(key)) return *meta;
  err << fmt::format(
      "note: station '{}' is not in the registry; assuming sea level\n", key);
  StationMeta meta;
  meta.station_key = key;
  meta.name = key;
  return meta;
}

void emit(const CommonOptions& o, const std::string& text, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.output, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError(fmt::format("cannot write '{}'", o.output));
  file << text;
  if (!file) throw IoError(fmt::format("write to '{}' failed", o.output));
}

std::string render(const Table& table, std::string_view format) {
  return format == "text" ? render_text(table) : render_csv(table);
}

// fit

int run_fit(const CommonOptions& o, std::ostream& out) {
  const auto series = load_series(o);
  const AnalysisConfig config = analysis_config(o);
  const auto fits = parallel_map(series.size(), o.threads, [&](std::size_t i) {
    try {
      return fit_mle(series[i].speeds(), config.fit);
    } catch (const Error& e) {
      throw Error(e.kind(), fmt::format("station '{}': {}",
                                        series[i].station_key, e.what()));
    }
  });

  Table table;
  table.title = "Maximum-likelihood Weibull fits";
  table.header = {"station_key", "n_raw", "n_used", "n_dropped", "k", "c_mps",
                  "log_likelihood", "distribution_mean_mps",
                  "arithmetic_mean_mps", "mean_gap", "validation", "iterations"};
  bool all_valid = true;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const FitResult& fit = fits[i];
    const ValidationVerdict verdict = validate_fit(fit, config.validation_threshold);
    all_valid = all_valid && verdict.passed;
    table.rows.push_back({series[i].station_key, std::to_string(series[i].n_raw),
                          std::to_string(fit.n_used),
                          std::to_string(series[i].n_dropped + fit.n_dropped),
                          fmt9(fit.model.shape()), fmt9(fit.model.scale()),
                          fmt9(fit.log_likelihood), fmt9(fit.distribution_mean),
                          fmt9(fit.arithmetic_mean), fmt9(verdict.gap),
                          verdict.passed ? "pass" : "fail",
                          std::to_string(fit.iterations)});
  }
  emit(o, render(table, o.format), out);
  return all_valid ? kExitOk : kExitVerification;
}

// report

int run_report(const CommonOptions& o, const std::string& table_arg,
               std::ostream& out, std::ostream& err) {
  std::vector<TableId> tables;
  if (table_arg == "all") {
    tables = {TableId::kParams, TableId::kSpeeds, TableId::kMetrics,
              TableId::kCorrected};
  } else {
    tables = {parse_table_id(table_arg)};
  }
  const StationRegistry registry = load_registry(o);
  const PowerCurve curve = load_curve(o);
  const AnalysisConfig config = analysis_config(o);

  std::vector<SiteReport> reports;
  if (o.input.empty()) {
    // Built-in parameter sets for the registry's published stations.
    std::vector<const PublishedStation*> selected;
    for (const PublishedStation& p : published_stations()) {
      if (o.station.empty() || p.key == o.station) selected.push_back(&p);
    }
    if (selected.empty()) {
      throw SchemaError(fmt::format("no built-in parameters for station '{}'",
                                    o.station));
    }
    reports = parallel_map(selected.size(), o.threads, [&](std::size_t i) {
      const PublishedStation& p = *selected[i];
      return analyze_model(registry.at(p.key), WeibullModel(p.k, p.c), curve,
                           config, p.arithmetic_mean);
    });
  } else {
    const auto series = load_series(o);
    std::vector<StationMeta> metas;
    for (const ObservationSeries& s : series) {
      metas.push_back(meta_for(registry, s.station_key, err));
    }
    reports = parallel_map(series.size(), o.threads, [&](std::size_t i) {
      return analyze_station(series[i], metas[i], curve, config);
    });
  }

  std::string text;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (i > 0) text += '\n';
    text += render(report_table(reports, tables[i]), o.format);
  }
  emit(o, text, out);
  return kExitOk;
}

// rose

int run_rose(const CommonOptions& o, double calm_speed, double secondary,
             std::ostream& out) {
  const ObservationSeries series = load_one_series(o);
  RoseOptions options;
  options.calm_speed = calm_speed;
  const WindRose rose = bin_directions(series.directions(), series.speeds(), options);
  const DominantDirections dom = dominant_directions(rose, secondary);

  std::string text;
  if (o.format == "svg") {
    text = rose_svg(rose, fmt::format("Wind rose: {}", series.station_key));
  } else if (o.format == "text") {
    Table table;
    table.title = fmt::format(
        "Wind rose for {} ({} directions, {} calm or missing)",
        series.station_key, rose.n_observations, rose.n_calm_or_invalid);
    table.header = {"angle_deg", "compass", "count", "frequency"};
    for (int i = 0; i < kRoseSectors; ++i) {
      table.rows.push_back({format_number(sector_center(i)),
                            compass_label(sector_center(i)),
                            std::to_string(rose.sector_count[i]),
                            format_number(rose.sector_frequency[i])});
    }
    text = render_text(table);
    text += fmt::format("primary: {} deg ({}), share {}\n",
                        format_number(dom.primary_sector), dom.compass_label,
                        format_number(dom.primary_share));
    if (dom.secondary_sector) {
      text += fmt::format("secondary: {} deg ({}), share {}\n",
                          format_number(*dom.secondary_sector),
                          compass_label(*dom.secondary_sector),
                          format_number(*dom.secondary_share));
    } else {
      text += "secondary: none\n";
    }
  } else {
    text = "angle_deg,frequency\n";
    for (const RosePoint& p : rose_plot_data(rose)) {
      text += fmt::format("{},{}\n", format_number(p.angle_deg),
                          fmt9(p.frequency));
    }
  }
  emit(o, text, out);
  return kExitOk;
}

// histogram

int run_histogram(const CommonOptions& o, double bin_width, std::ostream& out) {
  const ObservationSeries series = load_one_series(o);
  const std::vector<double> speeds = series.speeds();
  const Histogram hist = histogram(speeds, bin_width);
  const FitResult fit = fit_mle(speeds);

  std::string text;
  if (o.format == "svg") {
    text = histogram_svg(hist, fit.model,
                         fmt::format("Wind speed distribution: {}",
                                     series.station_key));
  } else {
    Table table;
    table.title = fmt::format(
        "Speed histogram for {} (n = {}, k = {}, c = {} m/s)", series.station_key,
        hist.n, format_number(fit.model.shape()), format_number(fit.model.scale()));
    table.header = {"bin_start_mps", "bin_end_mps", "count", "density_per_mps",
                    "weibull_pdf_per_mps"};
    for (const HistogramBin& b : hist.bins) {
      const double centre = 0.5 * (b.lower + b.upper);
      table.rows.push_back({fmt9(b.lower), fmt9(b.upper), std::to_string(b.count),
                            fmt9(b.density), fmt9(pdf(fit.model, centre))});
    }
    text = render(table, o.format);
  }
  emit(o, text, out);
  return kExitOk;
}

// curve-check

int run_curve_check(const CommonOptions& o, std::ostream& out) {
  const PowerCurve curve = load_curve(o);
  const CurveFitErrors e = fit_errors(curve);
  Table table;
  table.title = "Polynomial power curve vs tabulated points";
  table.header = {"quantity", "value"};
  table.rows = {{"mad_kw", fmt9(e.mad)},
                {"rmse_kw", fmt9(e.rmse)},
                {"max_abs_deviation_kw", fmt9(e.max_abs_deviation)},
                {"argmax_speed_mps", fmt9(e.argmax_speed)},
                {"cut_in_mps", fmt9(curve.cut_in())},
                {"rated_speed_mps", fmt9(curve.rated_speed())},
                {"cut_out_mps", fmt9(curve.cut_out())},
                {"rated_power_kw", fmt9(curve.rated_power())}};
  emit(o, render(table, o.format), out);
  return kExitOk;
}

// reproduce-paper

int run_reproduce(const CommonOptions& o, std::ostream& out) {
  const PowerCurve curve = load_curve(o);
  const VerificationReport report = reproduce_paper(curve, o.threads);
  emit(o,
       o.format == "text" ? render_verification_text(report)
                          : render_verification_csv(report),
       out);
  return report.all_passed() ? kExitOk : kExitVerification;
}

// generate

int run_generate(const CommonOptions& o, const GenerateOptions& g,
                 std::ostream& out) {
  const auto start = parse_timestamp(g.start);
  if (!start) throw UsageError(fmt::format("--start: bad timestamp '{}'", g.start));
  const WeibullModel model(g.k, g.c);
  const std::vector<double> speeds = sample(model, g.n, g.seed);
  Rng direction_rng(g.seed ^ 0x9e3779b97f4a7c15ULL);

  std::string text = fmt::format("{}\n", fmt::join(kObservationColumns, ","));
  text.reserve(text.size() + g.n * 48);
  for (std::size_t i = 0; i < g.n; ++i) {
    // Box-Muller normal around the prevailing direction, quantized to 10 deg.
    const double u1 = 1.0 - direction_rng();
    const double u2 = direction_rng();
    const double z = std::sqrt(-2.0 * std::log(u1)) *
                     std::cos(2.0 * std::numbers::pi * u2);
    double d = std::fmod(g.direction + g.spread * z, 360.0);
    if (d < 0.0) d += 360.0;
    int sector = static_cast<int>(std::lround(d / 10.0)) % 36;
    if (sector == 0) sector = 36;
    const Timestamp t = *start + std::chrono::minutes(
                                     static_cast<long long>(i) * g.step_minutes);
    text += fmt::format("{},{},{:.6g},{}\n", g.station, format_timestamp(t),
                        speeds[i], sector * 10);
  }
  emit(o, text, out);
  return kExitOk;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage:
      return kExitUsage;
    case ErrorKind::kConvergence:
    case ErrorKind::kAccuracy:
      return kExitNumerical;
    case ErrorKind::kDomain:
    case ErrorKind::kInsufficientData:
    case ErrorKind::kDegenerate:
    case ErrorKind::kIo:
    case ErrorKind::kSchema:
      return kExitData;
  }
  return kExitData;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Weibull wind-resource analysis toolkit", "windres"};
  app.require_subcommand(1);

  CommonOptions o;
  GenerateOptions g;
  std::string table_arg = "all";
  double bin_width = kDefaultBinWidth;
  double calm_speed = 0.5;
  double secondary = 0.15;

  auto* fit = app.add_subcommand("fit", "Fit Weibull (k, c) per station by maximum likelihood");
  add_ingest(fit, o, true);
  add_threads(fit, o);
  add_format(fit, o, {"csv", "text"});
  add_output(fit, o);

  auto* report = app.add_subcommand(
      "report", "Site report tables from observations or built-in parameters");
  add_ingest(report, o, false);
  add_metrics(report, o);
  add_threads(report, o);
  report->add_option("--registry", o.registry, "Extra station registry file");
  report->add_option("--table", table_arg, "all, params, speeds, metrics or corrected")
      ->capture_default_str();
  add_format(report, o, {"csv", "text"});
  add_output(report, o);

  auto* rose = app.add_subcommand("rose", "Wind-rose sector frequencies");
  add_ingest(rose, o, true);
  rose->add_option("--calm", calm_speed, "Calm threshold (m/s)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  rose->add_option("--secondary-threshold", secondary,
                   "Minimum share for a secondary direction")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  add_format(rose, o, {"csv", "text", "svg"});
  add_output(rose, o);

  auto* hist = app.add_subcommand("histogram", "Speed histogram with fitted PDF");
  add_ingest(hist, o, true);
  hist->add_option("--bin-width", bin_width, "Bin width (m/s)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_format(hist, o, {"csv", "text", "svg"});
  add_output(hist, o);

  auto* curve = app.add_subcommand("curve-check", "Polynomial vs tabular power curve errors");
  curve->add_option("--curve", o.curve, "Power curve CSV (speed_mps,power_kw)");
  add_format(curve, o, {"csv", "text"});
  add_output(curve, o);

  auto* repro = app.add_subcommand(
      "reproduce-paper", "Verify built-in published tables against recomputation");
  repro->add_option("--curve", o.curve, "Power curve CSV (speed_mps,power_kw)");
  add_threads(repro, o);
  add_format(repro, o, {"csv", "text"});
  add_output(repro, o);

  auto* gen = app.add_subcommand("generate", "Write a synthetic observation CSV");
  gen->add_option("--k", g.k, "Weibull shape")->check(CLI::PositiveNumber)->capture_default_str();
  gen->add_option("--c", g.c, "Weibull scale (m/s)")->check(CLI::PositiveNumber)->capture_default_str();
  gen->add_option("--n", g.n, "Number of rows")->check(CLI::PositiveNumber)->capture_default_str();
  gen->add_option("--seed", g.seed, "Random seed")->capture_default_str();
  gen->add_option("--station", g.station, "station_key")->capture_default_str();
  gen->add_option("--start", g.start, "First timestamp")->capture_default_str();
  gen->add_option("--step-minutes", g.step_minutes, "Minutes between rows")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen->add_option("--direction", g.direction, "Prevailing direction (deg)")
      ->check(CLI::Range(0.0, 360.0))
      ->capture_default_str();
  gen->add_option("--spread", g.spread, "Direction standard deviation (deg)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_output(gen, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (fit->parsed()) return run_fit(o, out);
    if (report->parsed()) return run_report(o, table_arg, out, err);
    if (rose->parsed()) return run_rose(o, calm_speed, secondary, out);
    if (hist->parsed()) return run_histogram(o, bin_width, out);
    if (curve->parsed()) return run_curve_check(o, out);
    if (repro->parsed()) return run_reproduce(o, out);
    if (gen->parsed()) return run_generate(o, g, out);
  } catch (const Error& e) {
    err << fmt::format("windres: {}: {}\n", to_string(e.kind()), e.what());
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << fmt::format("windres: error: {}\n", e.what());
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace windres::cli
