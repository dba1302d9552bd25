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

#include "windres/svg.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/core.h>

namespace windres {

namespace {

constexpr double kSize = 480.0;

std::string escape(std::string_view text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      default:
        out += ch;
    }
  }
  return out;
}

std::string header(double width, double height, std::string_view title) {
  return fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0:.0f}\" "
      "height=\"{1:.0f}\" viewBox=\"0 0 {0:.0f} {1:.0f}\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      "<text x=\"{2:.1f}\" y=\"20\" text-anchor=\"middle\" "
      "font-family=\"sans-serif\" font-size=\"14\">{3}</text>\n",
      width, height, width / 2.0, escape(title));
}

}  // namespace

std::string rose_svg(const WindRose& rose, std::string_view title) {
  const double cx = kSize / 2.0;
  const double cy = kSize / 2.0 + 10.0;
  const double radius = kSize / 2.0 - 40.0;
  const double peak = std::max(
      *std::max_element(rose.sector_frequency.begin(), rose.sector_frequency.end()),
      1e-12);

  std::string svg = header(kSize, kSize + 20.0, title);
  for (int ring = 1; ring <= 4; ++ring) {
    const double r = radius * ring / 4.0;
    svg += fmt::format(
        "<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"{:.2f}\" fill=\"none\" "
        "stroke=\"#ccc\"/>\n<text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"9\" "
        "fill=\"#666\">{:.3g}</text>\n",
        cx, cy, r, cx + 2.0, cy - r - 2.0, peak * ring / 4.0);
  }
  const char* cardinal[] = {"N", "E", "S", "W"};
  for (int q = 0; q < 4; ++q) {
    const double a = q * std::numbers::pi / 2.0;
    svg += fmt::format(
        "<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\" "
        "font-family=\"sans-serif\" font-size=\"12\">{}</text>\n",
        cx + (radius + 16.0) * std::sin(a), cy - (radius + 16.0) * std::cos(a) + 4.0,
        cardinal[q]);
  }
  // Each sector is a wedge spanning centre ± 5 deg.
  for (int i = 0; i < kRoseSectors; ++i) {
    const double f = rose.sector_frequency[i];
    if (f <= 0.0) continue;
    const double r = radius * f / peak;
    const double centre = sector_center(i) * std::numbers::pi / 180.0;
    const double half = 0.5 * kSectorWidth * std::numbers::pi / 180.0;
    const double a0 = centre - half;
    const double a1 = centre + half;
    svg += fmt::format(
        "<path d=\"M {:.2f} {:.2f} L {:.2f} {:.2f} A {:.2f} {:.2f} 0 0 1 "
        "{:.2f} {:.2f} Z\" fill=\"#3b7dd8\" fill-opacity=\"0.8\" "
        "stroke=\"#1d4f91\"/>\n",
        cx, cy, cx + r * std::sin(a0), cy - r * std::cos(a0), r, r,
        cx + r * std::sin(a1), cy - r * std::cos(a1));
  }
  svg += "</svg>\n";
  return svg;
}

std::string histogram_svg(const Histogram& hist,
                          const std::optional<WeibullModel>& fitted,
                          std::string_view title) {
  const double left = 50.0, right = 20.0, top = 35.0, bottom = 40.0;
  const double width = kSize * 1.4;
  const double height = kSize;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;

  double x_max = 12.0;
  double y_max = 0.65;
  for (const HistogramBin& b : hist.bins) {
    if (b.count > 0) x_max = std::max(x_max, b.upper);
    y_max = std::max(y_max, b.density);
  }
  auto px = [&](double v) { return left + plot_w * v / x_max; };
  auto py = [&](double d) { return top + plot_h * (1.0 - d / y_max); };

  std::string svg = header(width, height, title);
  svg += fmt::format(
      "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\" "
      "stroke=\"black\"/>\n<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" "
      "y2=\"{3:.2f}\" stroke=\"black\"/>\n",
      left, py(0.0), px(x_max), py(y_max));
  for (int tick = 0; tick <= static_cast<int>(x_max); tick += 2) {
    svg += fmt::format(
        "<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\" "
        "font-size=\"10\">{}</text>\n",
        px(tick), py(0.0) + 14.0, tick);
  }
  svg += fmt::format(
      "<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\" "
      "font-size=\"11\">wind speed (m/s)</text>\n",
      left + plot_w / 2.0, height - 8.0);
  for (const HistogramBin& b : hist.bins) {
    if (b.count == 0) continue;
    svg += fmt::format(
        "<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" "
        "fill=\"#9cc3e6\" stroke=\"#4a78a8\"/>\n",
        px(b.lower), py(b.density), px(b.upper) - px(b.lower),
        py(0.0) - py(b.density));
  }
  if (fitted) {
    std::string points;
    const int steps = 480;
    for (int i = 0; i <= steps; ++i) {
      const double v = x_max * i / steps;
      double d = 0.0;
      if (v > 0.0 || fitted->shape() >= 1.0) d = pdf(*fitted, v);
      d = std::min(d, y_max);
      points += fmt::format("{:.2f},{:.2f} ", px(v), py(d));
    }
    points.pop_back();
    svg += fmt::format(
        "<polyline points=\"{}\" fill=\"none\" stroke=\"#c0392b\" "
        "stroke-width=\"2\"/>\n",
        points);
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace windres
