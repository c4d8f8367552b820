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

#ifndef SEIRS_ENDEMIC_HPP
#define SEIRS_ENDEMIC_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "seirs/incidence.hpp"
#include "seirs/linalg.hpp"
#include "seirs/model.hpp"
#include "seirs/ode.hpp"
#include "seirs/reproduction.hpp"

namespace seirs {

/// Period averages of the six coefficients.
struct BarParams {
    double Lambda = 0.0;
    double mu = 0.0;
    double beta = 0.0;
    double eta = 0.0;
    double epsilon = 0.0;
    double gamma = 0.0;

    static BarParams from(const ModelParams& params);
};

/// Solution of the averaged algebraic system: the endemic infective
/// level r together with the companion levels p (susceptible),
/// q (exposed), s (recovered), the combination constant d and the
/// boundary root d0 = (Lambda_bar/mu_bar)/d.  Satisfies
/// p + q + r + s = Lambda_bar/mu_bar and r in (0, d0).
struct EndemicAlgebraicPoint {
    double r = 0.0;
    double p = 0.0;
    double q = 0.0;
    double s = 0.0;
    double d = 0.0;
    double d0 = 0.0;
    BarParams bars;
};

/// Unique positive root of the averaged infection-balance equation
///   (eps_bar beta_bar/(mu_bar+gamma_bar)) phi(Lb/mb - d r, Lb/mb, r)/r = mu_bar + eps_bar
/// by bisection on (0, d0) to an interval below 1e-12.  Requires the
/// averaged reproduction quantity to exceed 1; otherwise throws
/// NoEndemicRoot.
EndemicAlgebraicPoint solve_r(const ModelParams& params, const IncidenceSpec& inc);

/// The 4x4 matrix whose nonvanishing determinant is the technical
/// hypothesis for the endemic existence verdict, assembled entrywise
/// from the averaged coefficients, the algebraic point and the
/// incidence-derivative combinations K110, K010, K011.
struct ThresholdMatrix {
    Matrix m{4};
    double det = 0.0;
    double k110 = 0.0;
    double k010 = 0.0;
    double k011 = 0.0;
};

ThresholdMatrix threshold_matrix(const EndemicAlgebraicPoint& point, const IncidenceSpec& inc);

/// Closed-form determinant shortcut: available for N-independent
/// incidence families and for the Michaelis-Menten/standard families;
/// std::nullopt otherwise.  Note the N-independent form tracks the
/// published display, which differs from the assembled determinant by a
/// factor beta_bar; only the sign is used for verdicts.
std::optional<double> det_m_closed_form(const EndemicAlgebraicPoint& point, const IncidenceSpec& inc);

/// Log-scale a priori bounds for periodic orbits and the resulting
/// radius M of the shooting search region; diagnostic quantities.
struct AprioriBounds {
    double a1_xi = 0.0, a1_chi = 0.0;
    double a2_xi = 0.0, a2_chi = 0.0;
    double a3_xi = 0.0, a3_chi = 0.0;
    double a4_xi = 0.0, a4_chi = 0.0;
    double m0 = 0.0, m1 = 0.0, m2 = 0.0, m3 = 0.0, m4 = 0.0;
    double radius = 0.0;   // m0 + m1 + m2 + m3 + m4
    double k_lower = 0.0;  // persistence floor used for the chi bounds
};

AprioriBounds apriori_bounds(const ModelParams& params, double c1, double c2, double k_lower,
                             const EndemicAlgebraicPoint& point);

struct PersistenceEstimate {
    double k_lower = 0.0;       // 0.9 x the observed infective floor
    double min_infective = 0.0; // floor over runs and sample times
    bool degenerate = false;    // floor below 1e-10: subthreshold or infection-free data
    int runs = 0;
};

/// Simulation floor of the infective component over [burn_in, horizon]
/// from seeded random positive initial conditions.
PersistenceEstimate persistence_estimate(const ModelParams& params, const IncidenceSpec& inc,
                                         double burn_in, double horizon, int n_initial,
                                         std::uint64_t seed = 1);

/// A fixed point of the period map, i.e. a periodic orbit of the flow.
struct PeriodicOrbit {
    StateVec anchor;
    double residual = 0.0;                      // max-norm of flow(anchor, omega) - anchor
    std::array<double, 4> floquet_moduli{};     // eigenvalue moduli of the period-map Jacobian
    Trajectory orbit;                           // dense samples over one period
    bool endemic = false;                       // anchor infective component >= 1e-10
    int newton_iterations = 0;
};

/// Newton shooting on G(x) = flow(x, omega) - x.  On stalling, the
/// guess is refreshed once by a long pre-integration (200 periods) and
/// the iteration retried; then NewtonStalled.  Throws SingularJacobian
/// when the shooting matrix degenerates, std::invalid_argument unless
/// the guess is componentwise positive.
PeriodicOrbit find_periodic_orbit(const ModelParams& params, const IncidenceSpec& inc,
                                  const StateVec& guess, int max_newton = 25,
                                  const IntegratorOptions& opts = threshold_integrator_options());

enum class Verdict { EndemicGuaranteed, ExtinctionGuaranteed, Inconclusive };

const char* to_string(Verdict v);
const char* to_string(Classification c);

/// Combined threshold report: reproduction ratio, algebraic point,
/// threshold matrix and the comparison quantity
/// beta^l eps^l Lambda^l / ((mu+eps)^u (mu+gamma)^u mu^u).
struct ThresholdReport {
    R0Report r0;
    std::optional<EndemicAlgebraicPoint> point;
    std::optional<ThresholdMatrix> matrix;
    std::optional<double> det_closed_form;
    double comparison_quantity = 0.0;
    Verdict verdict = Verdict::Inconclusive;
    std::string shortcut; // which closed-form determinant route applied, if any
};

ThresholdReport existence_report(const ModelParams& params, const IncidenceSpec& inc,
                                 double r0_tol = 1e-8);

} // namespace seirs

#endif
