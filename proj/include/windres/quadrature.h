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

#ifndef WINDRES_QUADRATURE_H_
#define WINDRES_QUADRATURE_H_

#include <functional>

namespace windres {

struct QuadratureOptions {
  double abs_tolerance = 1e-9;
  double rel_tolerance = 0.0;
  unsigned max_depth = 40;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

// Globally adaptive 15-point Gauss-Kronrod on [a, b]: the interval with the
// largest Gauss-7 difference is bisected until the total error fits. The result is accepted when
// the error estimate is at most max(abs_tolerance, rel_tolerance * |value|);
// otherwise AccuracyError carries the achieved estimate.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureOptions& options = {});

}  // namespace windres

#endif  // WINDRES_QUADRATURE_H_
