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

#include "windres/stations.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <fmt/core.h>

#include "windres/csv.h"
#include "windres/error.h"

namespace windres {

namespace {

void validate(const StationMeta& m) {
  if (m.station_key.empty()) {
    throw SchemaError("station: empty station key");
  }
  if (!(m.latitude >= -90.0 && m.latitude <= 90.0)) {
    throw SchemaError(fmt::format("station {}: latitude {} outside [-90, 90]",
                                  m.station_key, m.latitude));
  }
  if (!(m.longitude >= -180.0 && m.longitude <= 180.0)) {
    throw SchemaError(fmt::format(
        "station {}: longitude {} outside [-180, 180]", m.station_key,
        m.longitude));
  }
  if (!(m.altitude >= 0.0)) {
    throw SchemaError(fmt::format("station {}: altitude {} must be >= 0",
                                  m.station_key, m.altitude));
  }
}

std::string unquote(std::string_view value, std::string_view where) {
  if (value.size() < 2 || value.front() != '"' || value.back() != '"') {
    throw SchemaError(fmt::format("{}: expected a quoted string", where));
  }
  return std::string(value.substr(1, value.size() - 2));
}

double number(std::string_view value, std::string_view where) {
  auto parsed = csv::parse_double(value);
  if (!parsed) throw SchemaError(fmt::format("{}: expected a number", where));
  return *parsed;
}

}  // namespace

StationRegistry StationRegistry::builtin() {
  StationRegistry r;
  r.add({"seeb", "Seeb", "Muscat", true, 23.595, 58.298, 8, "OOMS", 41256});
  r.add({"salalah", "Salalah", "Dhofar", true, 17.044, 54.102, 20, "OOSA",
         41316});
  r.add({"buraimi", "Buraimi", "Al Buraimi", false, 24.241, 55.785, 299,
         "OOBR", 41244});
  r.add({"masirah", "Masirah", "Ash Sharqiyah South", true, 20.672, 58.889,
         19, "OOMA", 41288});
  r.add({"thumrait", "Thumrait", "Dhofar", false, 17.681, 54.024, 467, "OOTH",
         41314});
  r.add({"sur", "Sur", "Ash Sharqiyah South", true, 22.538, 59.479, 14,
         "OOSR", 41268});
  r.add({"khasab", "Khasab", "Musandam", true, 26.211, 56.244, 3, "OOKB",
         41240});
  r.add({"majis", "Majis", "Sohar", true, 24.467, 56.644, 4, "OOSH", 41246});
  r.add({"fahud", "Fahud", "Az Zahirah", false, 22.348, 56.49, 170, "OOFD",
         41262});
  r.add({"saiq", "Saiq", "Ad Dakhiliyah", false, 23.074, 57.646, 1755, "OOSQ",
         41254});
  r.add({"duqm", "Duqm", "Al Wusta", true, 19.5, 57.65, 111, "OODQ",
         std::nullopt});
  return r;
}

StationRegistry StationRegistry::parse(std::string_view text,
                                       std::string_view source) {
  StationRegistry registry;
  std::optional<StationMeta> current;
  auto flush = [&] {
    if (current) registry.add(std::move(*current));
    current.reset();
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = csv::trim(csv::chomp(raw));
    if (line.empty() || line.front() == '#') continue;
    const std::string where = fmt::format("{}:{}", source, line_no);
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) {
        throw SchemaError(fmt::format("{}: malformed section header", where));
      }
      flush();
      current.emplace();
      current->station_key = std::string(csv::trim(line.substr(1, line.size() - 2)));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw SchemaError(fmt::format("{}: expected 'field = value'", where));
    }
    if (!current) {
      throw SchemaError(fmt::format("{}: field outside a [station] section", where));
    }
    const std::string_view key = csv::trim(line.substr(0, eq));
    const std::string_view value = csv::trim(line.substr(eq + 1));
    if (key == "name") {
      current->name = unquote(value, where);
    } else if (key == "governorate") {
      current->governorate = unquote(value, where);
    } else if (key == "coastal") {
      if (value != "true" && value != "false") {
        throw SchemaError(fmt::format("{}: coastal must be true or false", where));
      }
      current->coastal = value == "true";
    } else if (key == "latitude") {
      current->latitude = number(value, where);
    } else if (key == "longitude") {
      current->longitude = number(value, where);
    } else if (key == "altitude_m") {
      current->altitude = number(value, where);
    } else if (key == "icao_id") {
      current->icao_id = unquote(value, where);
    } else if (key == "wmo_id") {
      int id = 0;
      const auto [ptr, ec] =
          std::from_chars(value.data(), value.data() + value.size(), id);
      if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw SchemaError(fmt::format("{}: wmo_id must be an integer", where));
      }
      current->wmo_id = id;
    } else {
      throw SchemaError(fmt::format("{}: unknown field '{}'", where, key));
    }
  }
  flush();
  return registry;
}

StationRegistry StationRegistry::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError(fmt::format("cannot open station registry '{}'", path.string()));
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path.string());
}

void StationRegistry::add(StationMeta meta) {
  validate(meta);
  if (find(meta.station_key) != nullptr) {
    throw SchemaError(
        fmt::format("duplicate station key '{}'", meta.station_key));
  }
  stations_.push_back(std::move(meta));
}

void StationRegistry::merge(const StationRegistry& other) {
  for (const StationMeta& m : other.stations_) {
    auto it = std::find_if(stations_.begin(), stations_.end(), [&](const auto& s) {
      return s.station_key == m.station_key;
    });
    if (it != stations_.end()) {
      *it = m;
    } else {
      stations_.push_back(m);
    }
  }
}

const StationMeta* StationRegistry::find(std::string_view key) const {
  for (const StationMeta& m : stations_) {
    if (m.station_key == key) return &m;
  }
  return nullptr;
}

const StationMeta& StationRegistry::at(std::string_view key) const {
  const StationMeta* m = find(key);
  if (m == nullptr) {
    throw SchemaError(fmt::format("unknown station '{}'", key));
  }
  return *m;
}

std::string to_registry_text(const StationRegistry& registry) {
  std::string out;
  for (const StationMeta& m : registry.stations()) {
    out += fmt::format("[{}]\n", m.station_key);
    out += fmt::format("name = \"{}\"\n", m.name);
    out += fmt::format("governorate = \"{}\"\n", m.governorate);
    out += fmt::format("coastal = {}\n", m.coastal ? "true" : "false");
    out += fmt::format("latitude = {}\n", m.latitude);
    out += fmt::format("longitude = {}\n", m.longitude);
    out += fmt::format("altitude_m = {}\n", m.altitude);
    out += fmt::format("icao_id = \"{}\"\n", m.icao_id);
    if (m.wmo_id) out += fmt::format("wmo_id = {}\n", *m.wmo_id);
    out += "\n";
  }
  return out;
}

}  // namespace windres
