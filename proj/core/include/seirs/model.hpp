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

#ifndef SEIRS_MODEL_HPP
#define SEIRS_MODEL_HPP

#include "seirs/incidence.hpp"
#include "seirs/linalg.hpp"
#include "seirs/periodic.hpp"

namespace seirs {

/// The six periodic coefficients of the SEIRS system
///   S' = Lambda - beta*phi(S,N,I) - mu*S + eta*R
///   E' = beta*phi(S,N,I) - (mu+epsilon)*E
///   I' = epsilon*E - (mu+gamma)*I
///   R' = gamma*I - (mu+eta)*R
/// all sharing period omega.  Lambda, mu, beta, epsilon must be strictly
/// positive on [0, omega]; eta and gamma nonnegative.
struct ModelParams {
    PeriodicCoefficient Lambda;
    PeriodicCoefficient mu;
    PeriodicCoefficient beta;
    PeriodicCoefficient eta;
    PeriodicCoefficient epsilon;
    PeriodicCoefficient gamma;
    double omega = 1.0;

    /// Invariant region of the total population: [Lambda^l/mu^u, Lambda^u/mu^l].
    NBox population_box() const;

    /// Throws std::invalid_argument on positivity/period violations.
    void validate() const;
};

/// One (S, E, I, R) point.
struct StateVec {
    double S = 0.0;
    double E = 0.0;
    double I = 0.0;
    double R = 0.0;

    double N() const { return S + E + I + R; }
    double operator[](int i) const { return (&S)[i]; }
    double& operator[](int i) { return (&S)[i]; }
};

/// Right-hand side of the system at time t.  The four components sum to
/// Lambda(t) - mu(t)*N by cancellation of the phi, epsilon, gamma and
/// eta terms.  Throws IntegrationError on non-finite state components.
StateVec vector_field(const ModelParams& params, const IncidenceSpec& inc, double t, const StateVec& x);

/// Jacobian of the right-hand side with respect to (S, E, I, R); the
/// total population enters every phi slot, so each column mixes the
/// direct partial with the N channel.
Matrix state_jacobian(const ModelParams& params, const IncidenceSpec& inc, double t, const StateVec& x);

} // namespace seirs

#endif
