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

#ifndef SEIRS_INCIDENCE_HPP
#define SEIRS_INCIDENCE_HPP

#include <functional>
#include <optional>
#include <string>

namespace seirs {

/// Range of admissible total populations [n_min, n_max]; the invariant
/// region of the total-population equation.
struct NBox {
    double n_min = 0.0;
    double n_max = 0.0;
};

/// Rational function (a + b*N) / (c + d*N), the restricted grammar
/// allowed for the Michaelis-Menten contact function C(N).
struct RationalLinear {
    double a = 0.0, b = 1.0; // numerator   a + b*N
    double c = 1.0, d = 0.0; // denominator c + d*N

    double operator()(double n) const { return (a + b * n) / (c + d * n); }
    double deriv(double n) const
    {
        double den = c + d * n;
        return (b * den - (a + b * n) * d) / (den * den);
    }

    /// Parse "a+b*N/c+d*N" (the slash splits numerator and denominator;
    /// each side is a sum of a constant and an N term, e.g. "N/1+N").
    static RationalLinear parse(const std::string& text);
};

/// The incidence function phi(S, N, I) together with its partial
/// derivatives and the saturation constants c1 <= phi/(S I) <= c2 valid
/// on the invariant box.  Instances are immutable; copies are cheap.
class IncidenceSpec {
  public:
    enum class Family {
        MassAction,     // phi = S I
        Standard,       // phi = S I / N
        MichaelisMenten, // phi = C(N) S I / N
        HollingII,      // phi = S I / (1 + alpha I)
        PowerLaw,       // phi = I^p S^q
        SaturatedPower, // phi = S I^p / (1 + alpha I^q)
        Custom,
    };

    using Evaluator = std::function<double(double, double, double)>;

    static IncidenceSpec mass_action();
    static IncidenceSpec standard(const NBox& box);
    static IncidenceSpec michaelis_menten(const RationalLinear& contact, const NBox& box);
    static IncidenceSpec holling2(double alpha, const NBox& box);
    static IncidenceSpec power_law(double p, double q, const NBox& box);
    static IncidenceSpec saturated_power(double p, double q, double alpha, const NBox& box);

    /// User-supplied incidence.  Missing partials default to centered
    /// finite differences with step 1e-6 * max(1, |coordinate|); the
    /// saturation constants are estimated by a 64^3 grid scan over the
    /// box and are reported as empirical.
    static IncidenceSpec custom(Evaluator phi, std::optional<Evaluator> dS,
                                std::optional<Evaluator> dN, std::optional<Evaluator> dI,
                                const NBox& box);

    double phi(double S, double N, double I) const { return phi_(S, N, I); }
    double dphi_dS(double S, double N, double I) const { return ds_(S, N, I); }
    double dphi_dN(double S, double N, double I) const { return dn_(S, N, I); }
    double dphi_dI(double S, double N, double I) const { return di_(S, N, I); }

    double c1() const { return c1_; }
    double c2() const { return c2_; }
    bool constants_empirical() const { return constants_empirical_; }

    Family family() const { return family_; }
    const std::string& name() const { return name_; }

    /// True for families with no explicit N dependence.
    bool n_independent() const;

  private:
    IncidenceSpec() = default;

    Evaluator phi_, ds_, dn_, di_;
    double c1_ = 0.0, c2_ = 0.0;
    bool constants_empirical_ = false;
    Family family_ = Family::Custom;
    std::string name_;
};

} // namespace seirs

#endif
