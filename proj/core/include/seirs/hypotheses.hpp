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

#ifndef SEIRS_HYPOTHESES_HPP
#define SEIRS_HYPOTHESES_HPP

#include <array>
#include <string>

#include "seirs/incidence.hpp"

namespace seirs {

/// Result of one grid-based audit.  A failing check carries a witness
/// point (S, N, I); a passing check only provides grid evidence, not a
/// proof.
struct HypothesisCheck {
    bool passed = true;
    std::string detail;
    std::array<double, 3> witness{0.0, 0.0, 0.0};
    bool has_witness = false;
};

struct HypothesisReport {
    HypothesisCheck partials_consistent;      // partials match centered differences
    HypothesisCheck vanishes_on_boundary;     // phi(0,N,I) = phi(S,N,0) = 0
    HypothesisCheck ratio_bounded;            // c1 <= phi/(S I) <= c2 on the box
    HypothesisCheck monotone;                 // nondecreasing in S, I; nonincreasing in N
    HypothesisCheck ratio_nonincreasing_in_i; // phi/I nonincreasing in I
    double tight_c1 = 0.0;                    // empirically tightest saturation constants
    double tight_c2 = 0.0;

    bool all_passed() const
    {
        return partials_consistent.passed && vanishes_on_boundary.passed && ratio_bounded.passed &&
               monotone.passed && ratio_nonincreasing_in_i.passed;
    }
};

/// Audit the incidence function on a grid over
/// {0 <= S, I <= n_max, n_min <= N <= n_max}.  Throws
/// std::invalid_argument on a degenerate box (n_max <= 0 or
/// n_min > n_max).
HypothesisReport check_hypotheses(const IncidenceSpec& inc, const NBox& box, int grid_density = 64);

} // namespace seirs

#endif
