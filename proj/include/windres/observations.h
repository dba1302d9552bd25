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

#ifndef WINDRES_OBSERVATIONS_H_
#define WINDRES_OBSERVATIONS_H_

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace windres {

using Timestamp = std::chrono::sys_seconds;

struct Observation {
  Timestamp time;
  double speed;      // m/s, > 0
  double direction;  // deg, NaN when missing
};

// One station's cleaned record, ordered by time.
struct ObservationSeries {
  std::string station_key;
  std::vector<Observation> records;
  std::size_t n_raw = 0;      // data rows seen for this station
  std::size_t n_dropped = 0;  // rows rejected (calm, missing or malformed)
  std::size_t n_bad_direction = 0;  // retained rows whose direction was unusable
  Timestamp period_start{};
  Timestamp period_end{};

  std::vector<double> speeds() const;
  std::vector<double> directions() const;
};

struct IngestOptions {
  // Strict mode turns malformed rows (bad field count, unparsable
  // timestamp, non-numeric speed or direction) into SchemaError. Lenient
  // mode drops and counts them. Speeds <= 0 are always dropped and counted.
  bool strict = false;
  // Keep only rows for this station.
  std::optional<std::string> station;
};

// Observation CSV header, in order.
inline constexpr const char* kObservationColumns[] = {
    "station_key", "timestamp_iso8601", "speed_mps", "direction_deg"};

// ISO 8601 `YYYY-MM-DD[(T| )hh:mm[:ss]][Z|(+|-)hh:mm]`; nullopt if invalid.
std::optional<Timestamp> parse_timestamp(std::string_view text);
std::string format_timestamp(Timestamp t);

// All stations in the stream, grouped by key in first-appearance order.
// SchemaError on a bad header (naming the column), InsufficientDataError for
// a station left with no rows.
std::vector<ObservationSeries> parse_observations(std::istream& in,
                                                  std::string_view source,
                                                  const IngestOptions& options = {});

std::vector<ObservationSeries> ingest_all(const std::filesystem::path& path,
                                          const IngestOptions& options = {});

// Exactly one station: the file must hold one key, or options.station picks
// one. IoError when the file cannot be opened.
ObservationSeries ingest_observations(const std::filesystem::path& path,
                                      const IngestOptions& options = {});

// Writes the series back in the observation CSV format (header included).
void write_observations(std::ostream& out,
                        const std::vector<ObservationSeries>& series);

}  // namespace windres

#endif  // WINDRES_OBSERVATIONS_H_
