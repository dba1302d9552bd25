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

#ifndef WINDRES_HISTOGRAM_H_
#define WINDRES_HISTOGRAM_H_

#include <cstddef>
#include <span>
#include <vector>

namespace windres {

inline constexpr double kDefaultBinWidth = 0.5;  // m/s

struct HistogramBin {
  double lower = 0.0;  // inclusive, m/s
  double upper = 0.0;  // exclusive, m/s
  std::size_t count = 0;
  double density = 0.0;  // per m/s; Σ density * width = 1
};

struct Histogram {
  double bin_width = kDefaultBinWidth;
  std::size_t n = 0;
  std::vector<HistogramBin> bins;  // contiguous from 0 to the largest speed
};

// Density-normalized histogram on bins [i w, (i+1) w), directly comparable
// with a fitted pdf. DomainError for w <= 0 or a negative speed,
// InsufficientDataError for an empty list.
Histogram histogram(std::span<const double> speeds,
                    double bin_width = kDefaultBinWidth);

}  // namespace windres

#endif  // WINDRES_HISTOGRAM_H_
