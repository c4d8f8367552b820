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

#ifndef SEIRS_REPRODUCTION_HPP
#define SEIRS_REPRODUCTION_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "seirs/dfe.hpp"
#include "seirs/model.hpp"
#include "seirs/ode.hpp"

namespace seirs {

/// The 2x2 linearization blocks of the infected subsystem (E, I) at the
/// disease-free periodic solution: new infections F(t) and transitions
/// V(t), as time-dependent callables.
struct InfectionLinearization {
    std::function<Matrix(double)> F;
    std::function<Matrix(double)> V;
};

InfectionLinearization fv_matrices(const ModelParams& params, const IncidenceSpec& inc,
                                   const DfeSolution& dfe);

/// Integrator settings used for threshold quantities; tighter than the
/// general default because these get compared against 1.
IntegratorOptions threshold_integrator_options();

/// Spectral radius of the period map of x' = (F(t) - V(t)) x.
double threshold_rho(const ModelParams& params, const IncidenceSpec& inc);

enum class Classification { Extinction, Endemic, Critical };

/// Half-width of the band around 1 reported as Critical instead of
/// forcing a side.
inline constexpr double kCriticalBand = 1e-6;

struct R0Report {
    double rho_fv = 0.0;           // spectral radius of the unscaled period map
    double r0 = 0.0;               // reproduction ratio from the scaled-map bisection
    Classification classification = Classification::Critical;
    double bisection_residual = 0.0; // |rho at F/r0 - 1|
    int bisection_evals = 0;
};

/// Reproduction ratio by the standard reduction: the unique lambda > 0
/// with spectral radius of the period map of x' = (F(t)/lambda - V(t)) x
/// equal to 1, found by bracketed bisection (bracket grown geometrically
/// from 1).  A vanishing F short-circuits to r0 = 0.  Throws
/// std::runtime_error if the bracket growth exceeds 2^16.
R0Report r0_wang_zhao(const ModelParams& params, const IncidenceSpec& inc, double tol = 1e-8);

/// Small-amplitude approximation for the constant-coefficient family
/// with contact rate beta (1 + b cos(2 pi t)):
///   beta eps / ((mu+eps)(mu+gamma)) + (beta eps b^2 / 2) / (4 pi^2 + (2 mu + eps + gamma)^2).
double r0_bacaer_approx(double beta_bar, double eps, double mu, double gamma, double b);

struct AttractivityReport {
    double max_deviation = 0.0; // worst euclidean distance to (S*, 0, 0, 0) at the horizon
    int runs = 0;
    bool converged = false;     // max_deviation < tol
    std::vector<double> deviations;
};

/// Empirical check that trajectories approach the disease-free periodic
/// solution: integrates n_initial seeded random initial conditions from
/// the invariant box to the horizon and reports the worst terminal
/// deviation.  Meaningful for subthreshold configurations.
AttractivityReport dfe_attractivity_check(const ModelParams& params, const IncidenceSpec& inc,
                                          int n_initial, double horizon, double tol,
                                          std::uint64_t seed = 1);

} // namespace seirs

#endif
