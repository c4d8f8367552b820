// Copyright (c) 2026 the seirs authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SEIRS_RNG_HPP
#define SEIRS_RNG_HPP

#include <cstdint>

namespace seirs {

/// 64-bit linear congruential generator (Knuth MMIX multiplier
/// 6364136223846793005, increment 1442695040888963407).  Used for all
/// randomized checks so that runs are reproducible bit-for-bit across
/// platforms; std::mt19937 plus distributions would not be.
class Lcg {
  public:
    explicit Lcg(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next()
    {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    /// Uniform double in [0, 1), 53 bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in (0, 1).
    double positive()
    {
        double u = uniform();
        return u > 0.0 ? u : 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double range(double lo, double hi) { return lo + uniform() * (hi - lo); }

  private:
    std::uint64_t state_;
};

} // namespace seirs

#endif
