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

#include "windres/histogram.h"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

#include "windres/error.h"

namespace windres {

Histogram histogram(std::span<const double> speeds, double bin_width) {
  if (!(bin_width > 0.0) || !std::isfinite(bin_width)) {
    throw DomainError(fmt::format("histogram: bin width {} must be > 0", bin_width));
  }
  if (speeds.empty()) {
    throw InsufficientDataError("histogram: empty speed list");
  }
  double top = 0.0;
  for (double v : speeds) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw DomainError(fmt::format("histogram: speed {} must be >= 0", v));
    }
    top = std::max(top, v);
  }
  const auto n_bins = static_cast<std::size_t>(std::floor(top / bin_width)) + 1;

  Histogram h;
  h.bin_width = bin_width;
  h.n = speeds.size();
  h.bins.resize(n_bins);
  for (std::size_t i = 0; i < n_bins; ++i) {
    h.bins[i].lower = static_cast<double>(i) * bin_width;
    h.bins[i].upper = static_cast<double>(i + 1) * bin_width;
  }
  for (double v : speeds) {
    auto i = static_cast<std::size_t>(std::floor(v / bin_width));
    ++h.bins[std::min(i, n_bins - 1)].count;
  }
  const double scale = 1.0 / (static_cast<double>(h.n) * bin_width);
  for (HistogramBin& b : h.bins) {
    b.density = static_cast<double>(b.count) * scale;
  }
  return h;
}

}  // namespace windres
