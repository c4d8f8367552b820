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

#ifndef SEIRS_PERIODIC_HPP
#define SEIRS_PERIODIC_HPP

#include <vector>

namespace seirs {

/// One cosine term amplitude*cos(2*pi*k*t/omega + phase).
struct Harmonic {
    double amplitude = 0.0;
    int k = 1; // frequency multiple, >= 1
    double phase = 0.0;
};

/// An omega-periodic scalar coefficient: constant plus a finite sum of
/// cosine harmonics.  Immutable after construction; all operations are
/// pure, so values can be shared freely between threads.
///
/// Evaluation reduces the argument to [0, omega) first, which makes
/// f(t) == f(t + omega) exact whenever t + omega rounds exactly.
class PeriodicCoefficient {
  public:
    PeriodicCoefficient() = default;
    PeriodicCoefficient(double constant, double period);
    PeriodicCoefficient(double constant, std::vector<Harmonic> harmonics, double period);

    double operator()(double t) const;

    double constant() const { return constant_; }
    double period() const { return period_; }
    const std::vector<Harmonic>& harmonics() const { return harmonics_; }

    /// Period average (1/omega) * integral over one period; equal to the
    /// constant term because every harmonic integrates to zero.
    double mean() const { return constant_; }

    struct Range {
        double lower;
        double upper;
    };

    /// (min, max) over one period.  Exact for constants and single
    /// harmonics; otherwise a 4096-point scan refined by golden-section
    /// search to 1e-9.
    Range extrema() const;

    double lower() const { return extrema().lower; }
    double upper() const { return extrema().upper; }

    /// Exact integral over [t0, t1] via the closed-form antiderivative
    /// of the harmonic expansion.
    double integral(double t0, double t1) const;

    /// Pointwise sum; both operands must share the same period.
    PeriodicCoefficient operator+(const PeriodicCoefficient& other) const;

  private:
    double constant_ = 0.0;
    std::vector<Harmonic> harmonics_;
    double period_ = 1.0;
};

} // namespace seirs

#endif
