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

#ifndef WINDRES_RANDOM_H_
#define WINDRES_RANDOM_H_

#include <cstdint>
#include <random>

namespace windres {

// Seedable uniform source used for all synthetic data.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard, and the mapping to [0, 1) is done here as (bits >> 11) * 2^-53
// rather than through std::uniform_real_distribution (whose algorithm is
// implementation-defined). A given seed therefore yields the same stream on
// every conforming toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform draw in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double operator()() { return uniform(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace windres

#endif  // WINDRES_RANDOM_H_
