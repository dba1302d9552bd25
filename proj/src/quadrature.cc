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

#include "windres/quadrature.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <fmt/core.h>

#include "windres/error.h"

namespace windres {

namespace {

constexpr std::size_t kMaxPieces = 20000;

struct Piece {
  double a, b, value, error;
  unsigned depth;
  bool operator<(const Piece& other) const { return error < other.error; }
};

// One Kronrod-15 estimate with the embedded Gauss-7 difference as error.
Piece evaluate(const std::function<double(double)>& f, double a, double b,
               unsigned depth) {
  using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;
  const auto& x = Rule::abscissa();
  const auto& wk = Rule::weights();
  const auto& wg = boost::math::quadrature::gauss<double, 7>::weights();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f0 = f(mid);
  double kronrod = wk[0] * f0;
  double gauss = wg[0] * f0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double s = f(mid - half * x[i]) + f(mid + half * x[i]);
    kronrod += wk[i] * s;
    if (i % 2 == 0) gauss += wg[i / 2] * s;
  }
  const double error = std::max(std::abs(kronrod - gauss) * half,
                                50.0 * std::numeric_limits<double>::epsilon() *
                                    std::abs(kronrod * half));
  return {a, b, kronrod * half, error, depth};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureOptions& options) {
  QuadratureResult result;
  if (a == b) return result;

  std::priority_queue<Piece> pieces;
  pieces.push(evaluate(f, a, b, 0));
  double value = pieces.top().value;
  double error = pieces.top().error;
  std::vector<Piece> finished;
  auto accept = [&] {
    return std::max(options.abs_tolerance, options.rel_tolerance * std::abs(value));
  };
  while (!pieces.empty() && error > accept() && pieces.size() < kMaxPieces) {
    const Piece worst = pieces.top();
    pieces.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (worst.depth >= options.max_depth || mid <= worst.a || mid >= worst.b) {
      finished.push_back(worst);
      continue;
    }
    const Piece left = evaluate(f, worst.a, mid, worst.depth + 1);
    const Piece right = evaluate(f, mid, worst.b, worst.depth + 1);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    pieces.push(left);
    pieces.push(right);
  }
  // Re-sum to drop the drift of the running totals.
  result.value = 0.0;
  result.error_estimate = 0.0;
  for (; !pieces.empty(); pieces.pop()) finished.push_back(pieces.top());
  std::sort(finished.begin(), finished.end(),
            [](const Piece& l, const Piece& r) { return l.a < r.a; });
  for (const Piece& p : finished) {
    result.value += p.value;
    result.error_estimate += p.error;
  }
  const double limit = std::max(options.abs_tolerance,
                                options.rel_tolerance * std::abs(result.value));
  if (!std::isfinite(result.value) || result.error_estimate > limit) {
    throw AccuracyError(
        fmt::format("quadrature on [{}, {}]: error estimate {:.3g} exceeds "
                    "tolerance {:.3g}",
                    a, b, result.error_estimate, limit),
        result.value, result.error_estimate);
  }
  return result;
}

}  // namespace windres
