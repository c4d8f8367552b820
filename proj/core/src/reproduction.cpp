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

#include "seirs/reproduction.hpp"

#include <cmath>
#include <stdexcept>

#include "seirs/rng.hpp"

namespace seirs {

InfectionLinearization fv_matrices(const ModelParams& params, const IncidenceSpec& inc,
                                   const DfeSolution& dfe)
{
    // Captured by value so the callables outlive the inputs.
    InfectionLinearization lin;
    lin.F = [beta = params.beta, inc, dfe](double t) {
        Matrix f(2);
        const double s = dfe(t);
        f(0, 1) = beta(t) * inc.dphi_dI(s, s, 0.0);
        return f;
    };
    lin.V = [mu = params.mu, eps = params.epsilon, gamma = params.gamma](double t) {
        Matrix v(2);
        v(0, 0) = mu(t) + eps(t);
        v(1, 0) = -eps(t);
        v(1, 1) = mu(t) + gamma(t);
        return v;
    };
    return lin;
}

IntegratorOptions threshold_integrator_options()
{
    IntegratorOptions o;
    o.rel_tol = 1e-10;
    o.abs_tol = 1e-13;
    return o;
}

namespace {

double scaled_rho(const ModelParams& params, const InfectionLinearization& lin, double lambda)
{
    auto a = [&lin, lambda](double t) {
        Matrix f = lin.F(t), v = lin.V(t);
        Matrix m(2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m(i, j) = f(i, j) / lambda - v(i, j);
        return m;
    };
    return spectral_radius(fundamental_matrix(a, 2, 0.0, params.omega, threshold_integrator_options()));
}

Classification classify(double value)
{
    if (std::abs(value - 1.0) <= kCriticalBand) return Classification::Critical;
    return value < 1.0 ? Classification::Extinction : Classification::Endemic;
}

} // namespace

double threshold_rho(const ModelParams& params, const IncidenceSpec& inc)
{
    DfeSolution dfe(params.Lambda, params.mu, params.omega);
    return scaled_rho(params, fv_matrices(params, inc, dfe), 1.0);
}

R0Report r0_wang_zhao(const ModelParams& params, const IncidenceSpec& inc, double tol)
{
    DfeSolution dfe(params.Lambda, params.mu, params.omega);
    InfectionLinearization lin = fv_matrices(params, inc, dfe);

    R0Report rep;

    // A vanishing new-infection block has no positive scaling root.
    double fmax = 0.0;
    for (int i = 0; i <= 64; ++i) fmax = std::max(fmax, std::abs(lin.F(params.omega * i / 64.0)(0, 1)));

    rep.rho_fv = scaled_rho(params, lin, 1.0);
    rep.bisection_evals = 1;
    if (fmax < 1e-14) {
        rep.r0 = 0.0;
        rep.classification = Classification::Extinction;
        return rep;
    }

    // Grow the bracket geometrically from 1; rho is decreasing in the
    // scaling, so the subcritical end needs a larger lambda.
    double lo = 1.0, hi = 1.0;
    double rho_lo = rep.rho_fv, rho_hi = rep.rho_fv;
    int growth = 0;
    while (rho_lo <= 1.0) {
        lo /= 2.0;
        rho_lo = scaled_rho(params, lin, lo);
        ++rep.bisection_evals;
        if (++growth > 16) throw std::runtime_error("r0_wang_zhao: bracket growth exceeded 2^16 (degenerate model)");
    }
    growth = 0;
    while (rho_hi >= 1.0) {
        hi *= 2.0;
        rho_hi = scaled_rho(params, lin, hi);
        ++rep.bisection_evals;
        if (++growth > 16) throw std::runtime_error("r0_wang_zhao: bracket growth exceeded 2^16 (degenerate model)");
    }

    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        double rho_mid = scaled_rho(params, lin, mid);
        ++rep.bisection_evals;
        if (rho_mid >= 1.0)
            lo = mid;
        else
            hi = mid;
    }
    rep.r0 = 0.5 * (lo + hi);
    rep.bisection_residual = std::abs(scaled_rho(params, lin, rep.r0) - 1.0);
    ++rep.bisection_evals;
    rep.classification = classify(rep.r0);
    return rep;
}

double r0_bacaer_approx(double beta_bar, double eps, double mu, double gamma, double b)
{
    constexpr double four_pi_sq = 39.478417604357434475337963999505;
    const double base = beta_bar * eps / ((mu + eps) * (mu + gamma));
    const double rates = 2.0 * mu + eps + gamma;
    return base + (beta_bar * eps * b * b / 2.0) / (four_pi_sq + rates * rates);
}

AttractivityReport dfe_attractivity_check(const ModelParams& params, const IncidenceSpec& inc,
                                          int n_initial, double horizon, double tol,
                                          std::uint64_t seed)
{
    DfeSolution dfe(params.Lambda, params.mu, params.omega);
    NBox box = params.population_box();
    Lcg rng(seed);

    AttractivityReport rep;
    rep.runs = n_initial;
    const double s_star = dfe(horizon);
    for (int run = 0; run < n_initial; ++run) {
        double w[4];
        double total = 0.0;
        for (double& wi : w) {
            wi = rng.positive();
            total += wi;
        }
        const double n0 = box.n_max > box.n_min ? rng.range(box.n_min, box.n_max) : box.n_min;
        StateVec x0{w[0] / total * n0, w[1] / total * n0, w[2] / total * n0, w[3] / total * n0};

        StateVec xf = flow(params, inc, x0, 0.0, horizon);
        const double d = std::sqrt((xf.S - s_star) * (xf.S - s_star) + xf.E * xf.E + xf.I * xf.I +
                                   xf.R * xf.R);
        rep.deviations.push_back(d);
        rep.max_deviation = std::max(rep.max_deviation, d);
    }
    rep.converged = rep.max_deviation < tol;
    return rep;
}

} // namespace seirs
