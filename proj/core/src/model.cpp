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

#include "seirs/model.hpp"

#include <cmath>
#include <stdexcept>

#include "seirs/errors.hpp"

namespace seirs {

NBox ModelParams::population_box() const
{
    return {Lambda.lower() / mu.upper(), Lambda.upper() / mu.lower()};
}

void ModelParams::validate() const
{
    if (!(omega > 0.0)) throw std::invalid_argument("ModelParams: omega must be positive");
    auto check_period = [&](const PeriodicCoefficient& c, const char* name) {
        if (c.period() != omega)
            throw std::invalid_argument(std::string("ModelParams: ") + name + " does not share the model period");
    };
    check_period(Lambda, "Lambda");
    check_period(mu, "mu");
    check_period(beta, "beta");
    check_period(eta, "eta");
    check_period(epsilon, "epsilon");
    check_period(gamma, "gamma");

    auto strictly_positive = [](const PeriodicCoefficient& c, const char* name) {
        if (!(c.lower() > 0.0))
            throw std::invalid_argument(std::string("ModelParams: ") + name + " must be strictly positive on [0, omega]");
    };
    strictly_positive(Lambda, "Lambda");
    strictly_positive(mu, "mu");
    strictly_positive(beta, "beta");
    strictly_positive(epsilon, "epsilon");
    if (eta.lower() < 0.0) throw std::invalid_argument("ModelParams: eta must be nonnegative on [0, omega]");
    if (gamma.lower() < 0.0) throw std::invalid_argument("ModelParams: gamma must be nonnegative on [0, omega]");
}

StateVec vector_field(const ModelParams& params, const IncidenceSpec& inc, double t, const StateVec& x)
{
    if (!std::isfinite(x.S) || !std::isfinite(x.E) || !std::isfinite(x.I) || !std::isfinite(x.R))
        throw IntegrationError("vector_field: non-finite state component");

    const double N = x.N();
    const double phi = inc.phi(x.S, N, x.I);
    const double lam = params.Lambda(t);
    const double mu = params.mu(t);
    const double bet = params.beta(t);
    const double eta = params.eta(t);
    const double eps = params.epsilon(t);
    const double gam = params.gamma(t);

    StateVec d;
    d.S = lam - bet * phi - mu * x.S + eta * x.R;
    d.E = bet * phi - (mu + eps) * x.E;
    d.I = eps * x.E - (mu + gam) * x.I;
    d.R = gam * x.I - (mu + eta) * x.R;
    return d;
}

Matrix state_jacobian(const ModelParams& params, const IncidenceSpec& inc, double t, const StateVec& x)
{
    const double N = x.N();
    const double pS = inc.dphi_dS(x.S, N, x.I);
    const double pN = inc.dphi_dN(x.S, N, x.I);
    const double pI = inc.dphi_dI(x.S, N, x.I);
    const double mu = params.mu(t);
    const double bet = params.beta(t);
    const double eta = params.eta(t);
    const double eps = params.epsilon(t);
    const double gam = params.gamma(t);

    // d(phi)/dS = pS + pN, d/dE = pN, d/dI = pI + pN, d/dR = pN.
    Matrix j(4);
    j(0, 0) = -bet * (pS + pN) - mu;
    j(0, 1) = -bet * pN;
    j(0, 2) = -bet * (pI + pN);
    j(0, 3) = -bet * pN + eta;

    j(1, 0) = bet * (pS + pN);
    j(1, 1) = bet * pN - (mu + eps);
    j(1, 2) = bet * (pI + pN);
    j(1, 3) = bet * pN;

    j(2, 1) = eps;
    j(2, 2) = -(mu + gam);

    j(3, 2) = gam;
    j(3, 3) = -(mu + eta);
    return j;
}

} // namespace seirs
