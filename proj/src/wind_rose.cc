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

#include "windres/wind_rose.h"

#include <cmath>

#include <fmt/core.h>

#include "windres/error.h"

namespace windres {

namespace {

constexpr const char* kCompass[16] = {
    "N", "NNE", "NE", "ENE", "E", "ESE", "SE", "SSE",
    "S", "SSW", "SW", "WSW", "W", "WNW", "NW", "NNW",
};

int circular_distance(int a, int b) {
  const int d = std::abs(a - b) % kRoseSectors;
  return std::min(d, kRoseSectors - d);
}

}  // namespace

int sector_index(double direction_deg) {
  if (!(direction_deg >= 0.0 && direction_deg <= 360.0)) {
    throw DomainError(
        fmt::format("direction {} deg outside [0, 360]", direction_deg));
  }
  int nearest = static_cast<int>(std::floor(direction_deg / kSectorWidth + 0.5));
  if (nearest == 0) nearest = kRoseSectors;
  return nearest - 1;
}

std::string compass_label(double direction_deg) {
  const double wrapped = std::fmod(std::fmod(direction_deg, 360.0) + 360.0, 360.0);
  const int index = static_cast<int>(std::floor((wrapped + 11.25) / 22.5)) % 16;
  return kCompass[index];
}

WindRose bin_directions(std::span<const double> directions,
                        std::span<const double> speeds,
                        const RoseOptions& options) {
  if (!speeds.empty() && speeds.size() != directions.size()) {
    throw DomainError(fmt::format(
        "bin_directions: {} speeds for {} directions", speeds.size(),
        directions.size()));
  }
  WindRose rose;
  for (std::size_t i = 0; i < directions.size(); ++i) {
    const double d = directions[i];
    const bool calm = !speeds.empty() && !(speeds[i] >= options.calm_speed);
    if (calm || !(d >= 0.0 && d <= 360.0)) {
      ++rose.n_calm_or_invalid;
      continue;
    }
    ++rose.sector_count[sector_index(d)];
    ++rose.n_observations;
  }
  if (rose.n_observations == 0) {
    throw InsufficientDataError(fmt::format(
        "bin_directions: no usable directions among {} entries",
        directions.size()));
  }
  const double n = static_cast<double>(rose.n_observations);
  for (int i = 0; i < kRoseSectors; ++i) {
    rose.sector_frequency[i] = static_cast<double>(rose.sector_count[i]) / n;
  }
  return rose;
}

DominantDirections dominant_directions(const WindRose& rose,
                                       double secondary_threshold) {
  const auto& f = rose.sector_frequency;
  int primary = 0;
  for (int i = 1; i < kRoseSectors; ++i) {
    if (f[i] > f[primary]) primary = i;
  }
  DominantDirections out;
  out.primary_sector = sector_center(primary);
  out.primary_share = f[primary];
  out.compass_label = compass_label(out.primary_sector);

  int secondary = -1;
  for (int i = 0; i < kRoseSectors; ++i) {
    const double left = f[(i + kRoseSectors - 1) % kRoseSectors];
    const double right = f[(i + 1) % kRoseSectors];
    const bool local_max = f[i] >= left && f[i] >= right;
    if (!local_max || f[i] < secondary_threshold || f[i] == 0.0 ||
        circular_distance(i, primary) < 3) {
      continue;
    }
    if (secondary < 0 || f[i] > f[secondary]) secondary = i;
  }
  if (secondary >= 0) {
    out.secondary_sector = sector_center(secondary);
    out.secondary_share = f[secondary];
  }
  return out;
}

std::vector<RosePoint> rose_plot_data(const WindRose& rose) {
  std::vector<RosePoint> out;
  out.reserve(kRoseSectors);
  for (int i = 0; i < kRoseSectors; ++i) {
    out.push_back({sector_center(i), rose.sector_frequency[i]});
  }
  return out;
}

}  // namespace windres
