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

#ifndef WINDRES_REPRODUCE_H_
#define WINDRES_REPRODUCE_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "windres/power_curve.h"

namespace windres {

struct PublishedCorrection {
  double rho;             // kg/m^3
  double sigma;           // as printed (matches the ISA pressure ratio)
  double wpd_corrected;   // W/m^2
  double naep_corrected;  // GWh/MWp/year
};

// Published per-station results for the Omani stations. Duqm has no
// altitude-corrected row.
struct PublishedStation {
  std::string_view key;
  double k;
  double c;                  // m/s
  double distribution_mean;  // m/s
  double arithmetic_mean;    // m/s, sample average of the raw record
  double mode, median, mean, max_energy;  // m/s
  double wpd;     // W/m^2
  double p6_pct;  // %
  double naep;    // GWh/MWp/year
  std::optional<PublishedCorrection> correction;
  bool standalone = false;  // Duqm: reported in its own table
};

std::span<const PublishedStation> published_stations();

struct PublishedCurveErrors {
  double mad = 3.39;
  double rmse = 4.51;
  double max_abs_deviation = 11.87;
  double argmax_speed = 11.0;
  double poly_at_11 = 882.80;
};

enum class ToleranceKind { kAbsolute, kRelative };

struct VerificationCell {
  std::string table;
  std::string station;
  std::string quantity;
  double expected = 0.0;
  double computed = 0.0;
  double delta = 0.0;  // absolute or relative, per kind
  double tolerance = 0.0;
  ToleranceKind kind = ToleranceKind::kAbsolute;
  bool informational = false;
  bool passed = true;
};

struct VerificationReport {
  std::vector<VerificationCell> cells;

  bool all_passed() const;
  std::size_t checked() const;
  std::size_t failed() const;
};

// Recomputes every published table from the published (k, c) pairs and
// station altitudes and compares cell by cell. Per-station work may run on
// several threads; cell order is fixed.
VerificationReport reproduce_paper(const PowerCurve& curve = PowerCurve::standard(),
                                   unsigned threads = 1);

std::string render_verification_csv(const VerificationReport& report);
std::string render_verification_text(const VerificationReport& report);

}  // namespace windres

#endif  // WINDRES_REPRODUCE_H_
