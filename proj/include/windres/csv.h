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

#ifndef WINDRES_CSV_H_
#define WINDRES_CSV_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace windres::csv {

// Splits one line on commas. No quoting support; none of our formats need it.
std::vector<std::string_view> split(std::string_view line);

std::string_view trim(std::string_view s);

// Whole-field parse; nullopt on empty, partial or non-finite input.
std::optional<double> parse_double(std::string_view field);

// Strips a trailing '\r' so CRLF files read like LF files.
std::string_view chomp(std::string_view line);

}  // namespace windres::csv

#endif  // WINDRES_CSV_H_
