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

#include "seirs/ode.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "seirs/errors.hpp"

namespace seirs {

namespace {

// Dormand-Prince 4(5) tableau (FSAL).
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// b - bhat, the embedded 4th-order error weights.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

void check_finite(std::span<const double> v, double t)
{
    for (double x : v) {
        if (!std::isfinite(x)) {
            std::ostringstream os;
            os << "integrate: non-finite derivative or state at t = " << t;
            throw IntegrationError(os.str());
        }
    }
}

} // namespace

void Trajectory::append(double t, std::span<const double> x, std::span<const double> dx)
{
    if (!times_.empty() && !(t > times_.back()))
        throw std::logic_error("Trajectory: sample times must be strictly increasing");
    times_.push_back(t);
    states_.insert(states_.end(), x.begin(), x.end());
    derivs_.insert(derivs_.end(), dx.begin(), dx.end());
}

std::vector<double> Trajectory::at(double t) const
{
    if (times_.empty()) throw std::out_of_range("Trajectory: empty");
    if (t < times_.front() - 1e-12 || t > times_.back() + 1e-12)
        throw std::out_of_range("Trajectory: evaluation time outside the sampled range");
    t = std::clamp(t, times_.front(), times_.back());

    auto it = std::upper_bound(times_.begin(), times_.end(), t);
    std::size_t hi = std::min<std::size_t>(times_.size() - 1, it - times_.begin());
    if (hi == 0) hi = 1;
    std::size_t lo = hi - 1;

    const double t0 = times_[lo], t1 = times_[hi];
    const double h = t1 - t0;
    const double th = (t - t0) / h;
    const double h00 = (1 + 2 * th) * (1 - th) * (1 - th);
    const double h10 = th * (1 - th) * (1 - th);
    const double h01 = th * th * (3 - 2 * th);
    const double h11 = th * th * (th - 1);

    std::vector<double> out(dim_);
    for (int i = 0; i < dim_; ++i) {
        const double y0 = states_[lo * dim_ + i], y1 = states_[hi * dim_ + i];
        const double f0 = derivs_[lo * dim_ + i], f1 = derivs_[hi * dim_ + i];
        out[i] = h00 * y0 + h10 * h * f0 + h01 * y1 + h11 * h * f1;
    }
    return out;
}

Trajectory integrate(const Field& field, double t0, std::span<const double> x0, double t1,
                     const IntegratorOptions& opts)
{
    if (!(t1 > t0)) throw std::invalid_argument("integrate: need t1 > t0");
    if (!(opts.rel_tol > 0.0) || opts.rel_tol > 1e-2 || !(opts.abs_tol > 0.0) || opts.abs_tol > 1e-2)
        throw std::invalid_argument("integrate: tolerances must lie in (0, 1e-2]");

    const int n = static_cast<int>(x0.size());
    std::vector<double> y(x0.begin(), x0.end());
    std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n), ynew(n);

    check_finite(y, t0);
    field(t0, y, k1);
    check_finite(k1, t0);

    // Crude initial step from the first derivative; the controller
    // corrects within a few steps.
    double dn = 0.0, yn = 0.0;
    for (int i = 0; i < n; ++i) {
        dn = std::max(dn, std::abs(k1[i]));
        yn = std::max(yn, std::abs(y[i]));
    }
    double h = std::min(t1 - t0, 0.01 * (std::max(yn, 1.0) / std::max(dn, 1.0)));
    h = std::max(h, 1e-10 * (t1 - t0));

    Trajectory traj(n, true);
    traj.append(t0, y, k1);

    double t = t0;
    double err_prev = 1.0;
    bool rejected = false;

    for (long step = 0; step < opts.max_steps; ++step) {
        if (t >= t1) break;
        bool final_step = false;
        if (h >= t1 - t) {
            h = t1 - t;
            final_step = true;
        }
        if (h <= 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t))) {
            std::ostringstream os;
            os << "integrate: step size underflow at t = " << t << " (system appears stiff)";
            throw IntegrationError(os.str());
        }

        auto stage = [&](std::span<double> k, double c, auto&&... aw) {
            for (int i = 0; i < n; ++i) {
                double acc = 0.0;
                ((acc += aw.first * aw.second[i]), ...);
                ytmp[i] = y[i] + h * acc;
            }
            field(t + c * h, ytmp, k);
            check_finite(k, t + c * h);
        };
        stage(k2, c2, std::pair{a21, k1.data()});
        stage(k3, c3, std::pair{a31, k1.data()}, std::pair{a32, k2.data()});
        stage(k4, c4, std::pair{a41, k1.data()}, std::pair{a42, k2.data()}, std::pair{a43, k3.data()});
        stage(k5, c5, std::pair{a51, k1.data()}, std::pair{a52, k2.data()}, std::pair{a53, k3.data()},
              std::pair{a54, k4.data()});
        stage(k6, 1.0, std::pair{a61, k1.data()}, std::pair{a62, k2.data()}, std::pair{a63, k3.data()},
              std::pair{a64, k4.data()}, std::pair{a65, k5.data()});
        for (int i = 0; i < n; ++i)
            ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        field(t + h, ynew, k7);
        check_finite(k7, t + h);

        double err = 0.0;
        for (int i = 0; i < n; ++i) {
            double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            double sc = opts.abs_tol + opts.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            err += (e / sc) * (e / sc);
        }
        err = std::sqrt(err / n);

        if (err <= 1.0) {
            t = final_step ? t1 : t + h;
            y.swap(ynew);
            bool clamped = false;
            if (opts.clamp_nonnegative) {
                for (int i = 0; i < n; ++i) {
                    if (y[i] < 0.0) {
                        if (y[i] > -opts.clamp_slack) {
                            y[i] = 0.0;
                            clamped = true;
                        } else {
                            std::ostringstream os;
                            os << "integrate: component " << i << " fell to " << y[i] << " at t = " << t
                               << ", beyond the nonnegativity slack";
                            throw IntegrationError(os.str());
                        }
                    }
                }
            }
            if (clamped)
                field(t, y, k7);
            k1.swap(k7); // FSAL
            traj.append(t, y, k1);

            double fac = 0.9 * std::pow(err > 0 ? err : 1e-16, -0.17) * std::pow(err_prev, 0.04);
            fac = std::clamp(fac, 0.2, rejected ? 1.0 : 5.0);
            h *= fac;
            err_prev = std::max(err, 1e-4);
            rejected = false;
        } else {
            h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
            rejected = true;
        }
    }
    if (t < t1) throw IntegrationError("integrate: step budget exhausted");
    return traj;
}

Matrix fundamental_matrix(const std::function<Matrix(double)>& A, int n, double t0, double t1,
                          const IntegratorOptions& opts)
{
    if (t1 == t0) return Matrix::identity(n);
    Field field = [&A, n](double t, std::span<const double> x, std::span<double> dx) {
        Matrix a = A(t);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double s = 0.0;
                for (int k = 0; k < n; ++k) s += a(i, k) * x[k * n + j];
                dx[i * n + j] = s;
            }
    };
    std::vector<double> y0(n * n, 0.0);
    for (int i = 0; i < n; ++i) y0[i * n + i] = 1.0;
    Trajectory traj = integrate(field, t0, y0, t1, opts);
    auto yf = traj.back_state();
    Matrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = yf[i * n + j];
    return out;
}

namespace {

Field seirs_field(const ModelParams& params, const IncidenceSpec& inc)
{
    return [&params, &inc](double t, std::span<const double> x, std::span<double> dx) {
        StateVec s{x[0], x[1], x[2], x[3]};
        StateVec d = vector_field(params, inc, t, s);
        dx[0] = d.S;
        dx[1] = d.E;
        dx[2] = d.I;
        dx[3] = d.R;
    };
}

} // namespace

Trajectory simulate(const ModelParams& params, const IncidenceSpec& inc, const StateVec& x0,
                    double t0, double t1, const IntegratorOptions& opts)
{
    IntegratorOptions o = opts;
    o.clamp_nonnegative = true;
    const double y0[4] = {x0.S, x0.E, x0.I, x0.R};
    return integrate(seirs_field(params, inc), t0, std::span<const double>(y0, 4), t1, o);
}

StateVec flow(const ModelParams& params, const IncidenceSpec& inc, const StateVec& x0, double t0,
              double T, const IntegratorOptions& opts)
{
    if (T == 0.0) return x0;
    Trajectory traj = simulate(params, inc, x0, t0, t0 + T, opts);
    auto y = traj.back_state();
    return {y[0], y[1], y[2], y[3]};
}

std::pair<StateVec, Matrix> flow_with_jacobian(const ModelParams& params, const IncidenceSpec& inc,
                                               const StateVec& x0, double t0, double T,
                                               const IntegratorOptions& opts)
{
    if (T == 0.0) return {x0, Matrix::identity(4)};

    // State followed by the 4x4 variational matrix, row-major.
    Field field = [&params, &inc](double t, std::span<const double> x, std::span<double> dx) {
        StateVec s{x[0], x[1], x[2], x[3]};
        StateVec d = vector_field(params, inc, t, s);
        dx[0] = d.S;
        dx[1] = d.E;
        dx[2] = d.I;
        dx[3] = d.R;
        Matrix j = state_jacobian(params, inc, t, s);
        for (int i = 0; i < 4; ++i)
            for (int c = 0; c < 4; ++c) {
                double acc = 0.0;
                for (int k = 0; k < 4; ++k) acc += j(i, k) * x[4 + k * 4 + c];
                dx[4 + i * 4 + c] = acc;
            }
    };
    std::vector<double> y0(20, 0.0);
    y0[0] = x0.S;
    y0[1] = x0.E;
    y0[2] = x0.I;
    y0[3] = x0.R;
    for (int i = 0; i < 4; ++i) y0[4 + i * 4 + i] = 1.0;

    Trajectory traj = integrate(field, t0, y0, t0 + T, opts);
    auto yf = traj.back_state();
    StateVec xf{yf[0], yf[1], yf[2], yf[3]};
    Matrix jac(4);
    for (int i = 0; i < 4; ++i)
        for (int c = 0; c < 4; ++c) jac(i, c) = yf[4 + i * 4 + c];
    return {xf, jac};
}

Matrix flow_jacobian(const ModelParams& params, const IncidenceSpec& inc, const StateVec& x0,
                     double t0, double T, const IntegratorOptions& opts)
{
    return flow_with_jacobian(params, inc, x0, t0, T, opts).second;
}

} // namespace seirs
