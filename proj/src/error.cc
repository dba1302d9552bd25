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

#include "windres/error.h"

namespace windres {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDomain:
      return "domain error";
    case ErrorKind::kInsufficientData:
      return "insufficient data";
    case ErrorKind::kDegenerate:
      return "degenerate data";
    case ErrorKind::kConvergence:
      return "convergence failure";
    case ErrorKind::kAccuracy:
      return "accuracy failure";
    case ErrorKind::kIo:
      return "I/O error";
    case ErrorKind::kSchema:
      return "schema error";
    case ErrorKind::kUsage:
      return "usage error";
  }
  return "error";
}

}  // namespace windres
