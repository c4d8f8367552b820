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

#ifndef SEIRS_ODE_HPP
#define SEIRS_ODE_HPP

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "seirs/linalg.hpp"
#include "seirs/model.hpp"

namespace seirs {

struct IntegratorOptions {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    /// Clamp componentwise undershoot in (-clamp_slack, 0) to zero after
    /// accepted steps; undershoot beyond the slack is an error.  Used for
    /// population trajectories, off for general linear systems.
    bool clamp_nonnegative = false;
    double clamp_slack = 1e-12;
    long max_steps = 20'000'000;
};

/// df/dt callback: fills dx given (t, x).
using Field = std::function<void(double t, std::span<const double> x, std::span<double> dx)>;

/// Time-sampled solution path.  Stores the accepted integration nodes
/// with their derivatives; evaluation between nodes uses cubic Hermite
/// interpolation.
class Trajectory {
  public:
    Trajectory(int dim, bool dense) : dim_(dim), dense_(dense) {}

    int dim() const { return dim_; }
    bool dense_output() const { return dense_; }
    std::size_t size() const { return times_.size(); }

    double time(std::size_t i) const { return times_[i]; }
    std::span<const double> state(std::size_t i) const { return {states_.data() + i * dim_, static_cast<std::size_t>(dim_)}; }

    double front_time() const { return times_.front(); }
    double back_time() const { return times_.back(); }
    std::span<const double> back_state() const { return state(size() - 1); }

    /// Dense evaluation anywhere in [front_time, back_time].
    std::vector<double> at(double t) const;

    void append(double t, std::span<const double> x, std::span<const double> dx);

  private:
    int dim_;
    bool dense_;
    std::vector<double> times_;
    std::vector<double> states_;
    std::vector<double> derivs_;
};

/// Adaptive embedded Runge-Kutta (Dormand-Prince 4(5), PI step control).
/// Requires t1 > t0 and tolerances in (0, 1e-2].  Throws
/// IntegrationError on step-size underflow (stiffness) or non-finite
/// derivatives.
Trajectory integrate(const Field& field, double t0, std::span<const double> x0, double t1,
                     const IntegratorOptions& opts = {});

/// Fundamental matrix Phi(t1) with Phi' = A(t) Phi, Phi(t0) = I, all
/// columns integrated jointly.
Matrix fundamental_matrix(const std::function<Matrix(double)>& A, int n, double t0, double t1,
                          const IntegratorOptions& opts = {});

/// Population trajectory of the SEIRS system with nonnegativity
/// clamping enabled.
Trajectory simulate(const ModelParams& params, const IncidenceSpec& inc, const StateVec& x0,
                    double t0, double t1, const IntegratorOptions& opts = {});

/// End state of the time-T flow starting at (t0, x0).
StateVec flow(const ModelParams& params, const IncidenceSpec& inc, const StateVec& x0, double t0,
              double T, const IntegratorOptions& opts = {});

/// Derivative of the time-T flow with respect to the initial state,
/// computed from the variational system integrated along the
/// trajectory.  T = 0 returns the identity.
Matrix flow_jacobian(const ModelParams& params, const IncidenceSpec& inc, const StateVec& x0,
                     double t0, double T, const IntegratorOptions& opts = {});

/// One augmented pass returning both the flow end state and its
/// Jacobian; what the orbit shooting iterates on.
std::pair<StateVec, Matrix> flow_with_jacobian(const ModelParams& params, const IncidenceSpec& inc,
                                               const StateVec& x0, double t0, double T,
                                               const IntegratorOptions& opts = {});

} // namespace seirs

#endif
