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

#include "seirs/periodic.hpp"

#include <cmath>
#include <stdexcept>

namespace seirs {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Golden-section minimizer on [a, b]; f unimodal there after the grid
// scan has isolated the bracket.
template <typename F>
double golden_min(const F& f, double a, double b, double tol)
{
    const double inv_phi = 0.6180339887498949;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return std::min(fc, fd);
}

} // namespace

PeriodicCoefficient::PeriodicCoefficient(double constant, double period)
    : constant_(constant), period_(period)
{
    if (!(period > 0.0)) throw std::invalid_argument("PeriodicCoefficient: period must be positive");
}

PeriodicCoefficient::PeriodicCoefficient(double constant, std::vector<Harmonic> harmonics, double period)
    : constant_(constant), harmonics_(std::move(harmonics)), period_(period)
{
    if (!(period > 0.0)) throw std::invalid_argument("PeriodicCoefficient: period must be positive");
    for (const auto& h : harmonics_) {
        if (h.k < 1) throw std::invalid_argument("PeriodicCoefficient: frequency multiple must be >= 1");
    }
}

double PeriodicCoefficient::operator()(double t) const
{
    double tau = std::fmod(t, period_);
    if (tau < 0.0) tau += period_;
    double v = constant_;
    for (const auto& h : harmonics_) {
        v += h.amplitude * std::cos(kTwoPi * h.k * tau / period_ + h.phase);
    }
    return v;
}

PeriodicCoefficient::Range PeriodicCoefficient::extrema() const
{
    if (harmonics_.empty()) return {constant_, constant_};
    if (harmonics_.size() == 1) {
        // A single harmonic sweeps its full argument range over one
        // period, so the cosine attains both +-1 regardless of phase.
        double a = std::abs(harmonics_[0].amplitude);
        return {constant_ - a, constant_ + a};
    }

    const int n = 4096;
    const double h = period_ / n;
    double lo = (*this)(0.0), hi = lo;
    int ilo = 0, ihi = 0;
    for (int i = 1; i < n; ++i) {
        double v = (*this)(i * h);
        if (v < lo) {
            lo = v;
            ilo = i;
        }
        if (v > hi) {
            hi = v;
            ihi = i;
        }
    }
    auto eval = [this](double t) { return (*this)(t); };
    auto neg = [this](double t) { return -(*this)(t); };
    double refined_lo = golden_min(eval, (ilo - 1) * h, (ilo + 1) * h, 1e-9);
    double refined_hi = -golden_min(neg, (ihi - 1) * h, (ihi + 1) * h, 1e-9);
    return {std::min(lo, refined_lo), std::max(hi, refined_hi)};
}

double PeriodicCoefficient::integral(double t0, double t1) const
{
    double v = constant_ * (t1 - t0);
    for (const auto& h : harmonics_) {
        const double w = kTwoPi * h.k / period_;
        v += h.amplitude / w * (std::sin(w * t1 + h.phase) - std::sin(w * t0 + h.phase));
    }
    return v;
}

PeriodicCoefficient PeriodicCoefficient::operator+(const PeriodicCoefficient& other) const
{
    if (period_ != other.period_)
        throw std::invalid_argument("PeriodicCoefficient: cannot add coefficients with different periods");
    std::vector<Harmonic> merged = harmonics_;
    merged.insert(merged.end(), other.harmonics_.begin(), other.harmonics_.end());
    return {constant_ + other.constant_, std::move(merged), period_};
}

} // namespace seirs
