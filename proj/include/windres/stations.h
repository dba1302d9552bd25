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

#ifndef WINDRES_STATIONS_H_
#define WINDRES_STATIONS_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace windres {

struct StationMeta {
  std::string station_key;
  std::string name;
  std::string governorate;
  bool coastal = false;
  double latitude = 0.0;   // deg north
  double longitude = 0.0;  // deg east
  double altitude = 0.0;   // m above mean sea level
  std::string icao_id;
  std::optional<int> wmo_id;
};

// Ordered set of stations keyed by station_key.
class StationRegistry {
 public:
  // The eleven Omani stations (ten WMO stations plus Duqm airport).
  static StationRegistry builtin();

  // Parses a registry file: one [key] section per station followed by
  // `field = value` lines (strings quoted, booleans true/false). Fields:
  // name, governorate, coastal, latitude, longitude, altitude_m, icao_id,
  // wmo_id. Lines starting with '#' are comments.
  static StationRegistry parse(std::string_view text, std::string_view source);
  static StationRegistry load(const std::filesystem::path& path);

  // Validates and appends; SchemaError on a duplicate key or out-of-range
  // coordinates.
  void add(StationMeta meta);

  // Adds the other registry's stations, replacing entries with the same key.
  void merge(const StationRegistry& other);

  const StationMeta* find(std::string_view key) const;
  // SchemaError naming the key when absent.
  const StationMeta& at(std::string_view key) const;

  const std::vector<StationMeta>& stations() const { return stations_; }

 private:
  std::vector<StationMeta> stations_;
};

// Serializes in the format accepted by StationRegistry::parse.
std::string to_registry_text(const StationRegistry& registry);

}  // namespace windres

#endif  // WINDRES_STATIONS_H_
