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

#ifndef SEIRS_DFE_HPP
#define SEIRS_DFE_HPP

#include <vector>

#include "seirs/periodic.hpp"

namespace seirs {

/// The unique positive periodic solution S*(t) of the scalar equation
/// z' = Lambda(t) - mu(t) z, i.e. the susceptible profile of the
/// disease-free periodic solution (S*(t), 0, 0, 0).
///
/// With m(t) = integral of mu over [0, t] (closed form for harmonic
/// coefficients) and g(t) = integral of Lambda(u) e^{m(u)} du,
/// periodicity fixes the initial value y0 = g(omega) / (e^{m(omega)} - 1)
/// and S*(t) = e^{-m(t)} (y0 + g(t)).  g is tabulated on a uniform grid
/// with Gauss-Legendre panels, so evaluation is cheap enough to sit in
/// integrand hot loops.
class DfeSolution {
  public:
    DfeSolution(const PeriodicCoefficient& Lambda, const PeriodicCoefficient& mu, double period);

    /// S*(t) for any t (argument reduced modulo the period).
    double operator()(double t) const;

    double initial_value() const { return y0_; }
    double period() const { return period_; }

  private:
    double g(double tau) const; // cumulative integral of Lambda e^m on [0, tau]

    PeriodicCoefficient lambda_;
    PeriodicCoefficient mu_;
    double period_;
    double y0_;
    std::vector<double> g_table_; // g at i * period / kCells
};

} // namespace seirs

#endif
