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

#include "windres/observations.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>

#include <fmt/format.h>

#include "windres/csv.h"
#include "windres/error.h"

namespace windres {

namespace {

constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

// Reads exactly `width` digits starting at pos.
std::optional<int> digits(std::string_view s, std::size_t pos, std::size_t width) {
  if (pos + width > s.size()) return std::nullopt;
  int value = 0;
  const char* first = s.data() + pos;
  const auto [ptr, ec] = std::from_chars(first, first + width, value);
  if (ec != std::errc() || ptr != first + width) return std::nullopt;
  return value;
}

}  // namespace

std::vector<double> ObservationSeries::speeds() const {
  std::vector<double> out;
  out.reserve(records.size());
  for (const Observation& r : records) out.push_back(r.speed);
  return out;
}

std::vector<double> ObservationSeries::directions() const {
  std::vector<double> out;
  out.reserve(records.size());
  for (const Observation& r : records) out.push_back(r.direction);
  return out;
}

std::optional<Timestamp> parse_timestamp(std::string_view text) {
  using namespace std::chrono;
  text = csv::trim(text);
  if (text.size() < 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  const auto y = digits(text, 0, 4);
  const auto mo = digits(text, 5, 2);
  const auto d = digits(text, 8, 2);
  if (!y || !mo || !d) return std::nullopt;
  const year_month_day date{year{*y}, month{static_cast<unsigned>(*mo)},
                            day{static_cast<unsigned>(*d)}};
  if (!date.ok()) return std::nullopt;

  int hh = 0, mm = 0, ss = 0;
  std::size_t pos = 10;
  if (pos < text.size() && (text[pos] == 'T' || text[pos] == ' ')) {
    const auto h = digits(text, pos + 1, 2);
    if (!h || pos + 3 >= text.size() || text[pos + 3] != ':') return std::nullopt;
    const auto m = digits(text, pos + 4, 2);
    if (!m) return std::nullopt;
    hh = *h;
    mm = *m;
    pos += 6;
    if (pos < text.size() && text[pos] == ':') {
      const auto s = digits(text, pos + 1, 2);
      if (!s) return std::nullopt;
      ss = *s;
      pos += 3;
    }
  }
  int offset_minutes = 0;
  if (pos < text.size()) {
    if (text[pos] == 'Z' && pos + 1 == text.size()) {
      ++pos;
    } else if ((text[pos] == '+' || text[pos] == '-') && pos + 6 == text.size() &&
               text[pos + 3] == ':') {
      const auto oh = digits(text, pos + 1, 2);
      const auto om = digits(text, pos + 4, 2);
      if (!oh || !om || *oh > 23 || *om > 59) return std::nullopt;
      offset_minutes = (*oh * 60 + *om) * (text[pos] == '-' ? -1 : 1);
      pos = text.size();
    } else {
      return std::nullopt;
    }
  }
  if (hh > 23 || mm > 59 || ss > 60) return std::nullopt;
  return sys_days{date} + hours{hh} + minutes{mm} + seconds{ss} -
         minutes{offset_minutes};
}

std::string format_timestamp(Timestamp t) {
  using namespace std::chrono;
  const sys_days day_point = floor<days>(t);
  const year_month_day date{day_point};
  const hh_mm_ss<seconds> tod{t - day_point};
  return fmt::format("{:04d}-{:02d}-{:02d}T{:02d}:{:02d}:{:02d}Z",
                     static_cast<int>(date.year()),
                     static_cast<unsigned>(date.month()),
                     static_cast<unsigned>(date.day()), tod.hours().count(),
                     tod.minutes().count(), tod.seconds().count());
}

std::vector<ObservationSeries> parse_observations(std::istream& in,
                                                  std::string_view source,
                                                  const IngestOptions& options) {
  std::string line;
  if (!std::getline(in, line)) {
    throw SchemaError(fmt::format("{}: empty file, expected header {}", source,
                                  fmt::join(kObservationColumns, ",")));
  }
  const auto header = csv::split(csv::chomp(line));
  for (std::size_t i = 0; i < std::size(kObservationColumns); ++i) {
    if (i >= header.size()) {
      throw SchemaError(fmt::format("{}: header is missing column '{}'", source,
                                    kObservationColumns[i]));
    }
    if (csv::trim(header[i]) != kObservationColumns[i]) {
      throw SchemaError(fmt::format(
          "{}: header column {} is '{}', expected '{}'", source, i + 1,
          csv::trim(header[i]), kObservationColumns[i]));
    }
  }
  if (header.size() > std::size(kObservationColumns)) {
    throw SchemaError(fmt::format("{}: unexpected extra header column '{}'",
                                  source,
                                  csv::trim(header[std::size(kObservationColumns)])));
  }

  std::vector<ObservationSeries> groups;
  std::map<std::string, std::size_t, std::less<>> index;
  auto group_for = [&](std::string_view key) -> ObservationSeries& {
    auto it = index.find(key);
    if (it == index.end()) {
      it = index.emplace(std::string(key), groups.size()).first;
      groups.emplace_back().station_key = std::string(key);
    }
    return groups[it->second];
  };

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = csv::chomp(line);
    if (csv::trim(row).empty()) continue;
    const auto fields = csv::split(row);
    const std::string_view key = fields.empty() ? std::string_view{} : csv::trim(fields[0]);
    if (options.station && key != *options.station) continue;

    auto malformed = [&](std::string_view what) {
      if (options.strict) {
        throw SchemaError(fmt::format("{} line {}: {}", source, line_no, what));
      }
    };
    if (key.empty()) {
      // Cannot be charged to any station, so it cannot be counted either.
      throw SchemaError(
          fmt::format("{} line {}: missing station_key", source, line_no));
    }
    if (fields.size() != std::size(kObservationColumns)) {
      malformed(fmt::format("expected {} fields, found {}",
                            std::size(kObservationColumns), fields.size()));
      ObservationSeries& g = group_for(key);
      ++g.n_raw;
      ++g.n_dropped;
      continue;
    }
    ObservationSeries& g = group_for(key);
    ++g.n_raw;

    const auto time = parse_timestamp(fields[1]);
    if (!time) {
      malformed(fmt::format("unparsable timestamp '{}'", csv::trim(fields[1])));
      ++g.n_dropped;
      continue;
    }
    const auto speed = csv::parse_double(fields[2]);
    if (!speed) {
      if (!csv::trim(fields[2]).empty()) {
        malformed(fmt::format("non-numeric speed '{}'", csv::trim(fields[2])));
      }
      ++g.n_dropped;
      continue;
    }
    if (!(*speed > 0.0)) {
      ++g.n_dropped;
      continue;
    }
    double direction = kMissing;
    if (!csv::trim(fields[3]).empty()) {
      const auto dir = csv::parse_double(fields[3]);
      if (dir && *dir >= 0.0 && *dir <= 360.0) {
        direction = *dir;
      } else {
        malformed(fmt::format("invalid direction '{}'", csv::trim(fields[3])));
        ++g.n_bad_direction;
      }
    }
    g.records.push_back({*time, *speed, direction});
  }

  for (ObservationSeries& g : groups) {
    if (g.records.empty()) {
      throw InsufficientDataError(fmt::format(
          "{}: station '{}' has no usable rows ({} read, {} dropped)", source,
          g.station_key, g.n_raw, g.n_dropped));
    }
    std::stable_sort(g.records.begin(), g.records.end(),
                     [](const Observation& a, const Observation& b) {
                       return a.time < b.time;
                     });
    g.period_start = g.records.front().time;
    g.period_end = g.records.back().time;
  }
  if (groups.empty()) {
    throw InsufficientDataError(
        options.station
            ? fmt::format("{}: no rows for station '{}'", source, *options.station)
            : fmt::format("{}: no data rows", source));
  }
  return groups;
}

std::vector<ObservationSeries> ingest_all(const std::filesystem::path& path,
                                          const IngestOptions& options) {
  std::ifstream in(path);
  if (!in) {
    throw IoError(fmt::format("cannot open observations '{}'", path.string()));
  }
  return parse_observations(in, path.string(), options);
}

ObservationSeries ingest_observations(const std::filesystem::path& path,
                                      const IngestOptions& options) {
  auto groups = ingest_all(path, options);
  if (groups.size() > 1) {
    throw SchemaError(fmt::format(
        "'{}' holds {} stations; select one (first two: '{}', '{}')",
        path.string(), groups.size(), groups[0].station_key,
        groups[1].station_key));
  }
  return std::move(groups.front());
}

void write_observations(std::ostream& out,
                        const std::vector<ObservationSeries>& series) {
  out << fmt::format("{}\n", fmt::join(kObservationColumns, ","));
  for (const ObservationSeries& s : series) {
    for (const Observation& r : s.records) {
      if (std::isnan(r.direction)) {
        out << fmt::format("{},{},{},\n", s.station_key,
                           format_timestamp(r.time), r.speed);
      } else {
        out << fmt::format("{},{},{},{}\n", s.station_key,
                           format_timestamp(r.time), r.speed, r.direction);
      }
    }
  }
}

}  // namespace windres
