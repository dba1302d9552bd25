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

#ifndef WINDRES_SVG_H_
#define WINDRES_SVG_H_

#include <optional>
#include <string>
#include <string_view>

#include "windres/histogram.h"
#include "windres/weibull.h"
#include "windres/wind_rose.h"

namespace windres {

// Standalone SVG polar chart of a rose, north up, bearings clockwise.
std::string rose_svg(const WindRose& rose, std::string_view title);

// Histogram bars with an optional fitted-pdf overlay, on fixed axes
// 0-12 m/s and 0-0.65 per m/s unless the data exceed them.
std::string histogram_svg(const Histogram& hist,
                          const std::optional<WeibullModel>& fitted,
                          std::string_view title);

}  // namespace windres

#endif  // WINDRES_SVG_H_
