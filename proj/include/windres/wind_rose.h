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

#ifndef WINDRES_WIND_ROSE_H_
#define WINDRES_WIND_ROSE_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace windres {

// Directions are meteorological: the bearing the wind blows FROM, in degrees
// clockwise from true north.
inline constexpr int kRoseSectors = 36;
inline constexpr double kSectorWidth = 10.0;

struct RoseOptions {
  // Observations slower than this are calms and carry no direction. Only
  // applied when speeds are supplied.
  double calm_speed = 0.5;
};

struct WindRose {
  // sector_frequency[i] belongs to the sector centred on (i + 1) * 10 deg,
  // so index 35 is north (360 deg).
  std::array<double, kRoseSectors> sector_frequency{};
  std::array<std::size_t, kRoseSectors> sector_count{};
  std::size_t n_observations = 0;
  std::size_t n_calm_or_invalid = 0;
};

struct DominantDirections {
  double primary_sector = 0.0;  // deg
  double primary_share = 0.0;
  std::optional<double> secondary_sector;
  std::optional<double> secondary_share;
  std::string compass_label;
};

struct RosePoint {
  double angle_deg;
  double frequency;
};

// Sector centre in degrees for index 0..35.
inline double sector_center(int index) { return (index + 1) * kSectorWidth; }

// Sector index (0..35) for a direction in [0, 360]: round to the nearest
// 10 deg, halves upward, with 0 deg folded onto 360 deg.
int sector_index(double direction_deg);

// 16-point compass name (N, NNE, ..., NNW) nearest to a bearing.
std::string compass_label(double direction_deg);

// Bins directions into the 36-sector rose. NaN or out-of-range directions,
// and calms when speeds are given (same length as directions), are counted
// in n_calm_or_invalid. InsufficientDataError if nothing remains.
WindRose bin_directions(std::span<const double> directions,
                        std::span<const double> speeds = {},
                        const RoseOptions& options = {});

// Primary = most frequent sector, ties to the smallest angle. A secondary is
// reported when another local-maximum sector holds at least
// secondary_threshold of observations and sits 3 or more sectors away.
DominantDirections dominant_directions(const WindRose& rose,
                                       double secondary_threshold = 0.15);

// 36 (angle, frequency) pairs in ascending angle.
std::vector<RosePoint> rose_plot_data(const WindRose& rose);

}  // namespace windres

#endif  // WINDRES_WIND_ROSE_H_
