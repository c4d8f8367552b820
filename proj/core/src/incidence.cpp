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

#include "seirs/incidence.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace seirs {

namespace {

void require_box(const NBox& box, bool need_positive_n)
{
    if (!(box.n_max > 0.0) || box.n_min > box.n_max)
        throw std::invalid_argument("incidence: invalid population box");
    if (need_positive_n && !(box.n_min > 0.0))
        throw std::invalid_argument("incidence: this family needs n_min > 0");
}

// min/max of f over [lo, hi], 2048-point scan.
template <typename F>
std::pair<double, double> scan_1d(const F& f, double lo, double hi)
{
    if (hi <= lo) {
        double v = f(lo);
        return {v, v};
    }
    const int n = 2048;
    double mn = f(lo), mx = mn;
    for (int i = 1; i <= n; ++i) {
        double v = f(lo + (hi - lo) * i / n);
        mn = std::min(mn, v);
        mx = std::max(mx, v);
    }
    return {mn, mx};
}

// Empirical saturation constants: min/max of phi/(S I) over an interior
// grid of the box (S, I strictly inside (0, n_max], N across the box).
std::pair<double, double> scan_ratio(const IncidenceSpec::Evaluator& phi, const NBox& box, int density)
{
    double mn = 0.0, mx = 0.0;
    bool first = true;
    const int nn = box.n_max > box.n_min ? density : 1;
    for (int a = 1; a <= density; ++a) {
        double S = box.n_max * a / density;
        for (int c = 1; c <= density; ++c) {
            double I = box.n_max * c / density;
            for (int b = 0; b < nn; ++b) {
                double N = nn == 1 ? box.n_min : box.n_min + (box.n_max - box.n_min) * b / (nn - 1);
                double v = phi(S, N, I) / (S * I);
                if (first || v < mn) mn = v;
                if (first || v > mx) mx = v;
                first = false;
            }
        }
    }
    return {mn, mx};
}

double fd_step(double x) { return 1e-6 * std::max(1.0, std::abs(x)); }

} // namespace

RationalLinear RationalLinear::parse(const std::string& text)
{
    // Split numerator/denominator at the single '/'.
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? std::string("1") : text.substr(slash + 1);

    auto parse_side = [](const std::string& side, double& constant, double& slope) {
        constant = 0.0;
        slope = 0.0;
        size_t i = 0;
        while (i < side.size()) {
            while (i < side.size() && std::isspace(static_cast<unsigned char>(side[i]))) ++i;
            if (i >= side.size()) break;
            double sign = 1.0;
            if (side[i] == '+') {
                ++i;
                continue;
            }
            if (side[i] == '-') {
                sign = -1.0;
                ++i;
                while (i < side.size() && std::isspace(static_cast<unsigned char>(side[i]))) ++i;
            }
            // Read one term up to the next top-level +/- (exponents keep
            // their sign glued to 'e').
            size_t start = i;
            while (i < side.size()) {
                char ch = side[i];
                if ((ch == '+' || ch == '-') && i > start) {
                    char prev = side[i - 1];
                    if (prev != 'e' && prev != 'E') break;
                }
                ++i;
            }
            std::string term = side.substr(start, i - start);
            while (!term.empty() && std::isspace(static_cast<unsigned char>(term.back()))) term.pop_back();
            if (term.empty()) throw std::invalid_argument("C(N): empty term in '" + side + "'");

            auto npos = term.find_first_of("Nn");
            if (npos == std::string::npos) {
                size_t used = 0;
                constant += sign * std::stod(term, &used);
                if (used != term.size()) throw std::invalid_argument("C(N): bad term '" + term + "'");
            } else {
                std::string coef = term.substr(0, npos);
                while (!coef.empty() && (std::isspace(static_cast<unsigned char>(coef.back())) || coef.back() == '*'))
                    coef.pop_back();
                if (term.find_first_not_of(" \t", npos + 1) != std::string::npos)
                    throw std::invalid_argument("C(N): bad term '" + term + "'");
                slope += sign * (coef.empty() ? 1.0 : std::stod(coef));
            }
        }
    };

    RationalLinear r;
    parse_side(num, r.a, r.b);
    parse_side(den, r.c, r.d);
    return r;
}

IncidenceSpec IncidenceSpec::mass_action()
{
    IncidenceSpec s;
    s.family_ = Family::MassAction;
    s.name_ = "mass-action";
    s.phi_ = [](double S, double, double I) { return S * I; };
    s.ds_ = [](double, double, double I) { return I; };
    s.dn_ = [](double, double, double) { return 0.0; };
    s.di_ = [](double S, double, double) { return S; };
    s.c1_ = s.c2_ = 1.0;
    return s;
}

IncidenceSpec IncidenceSpec::standard(const NBox& box)
{
    require_box(box, true);
    IncidenceSpec s;
    s.family_ = Family::Standard;
    s.name_ = "standard";
    s.phi_ = [](double S, double N, double I) { return S * I / N; };
    s.ds_ = [](double, double N, double I) { return I / N; };
    s.dn_ = [](double S, double N, double I) { return -S * I / (N * N); };
    s.di_ = [](double S, double N, double) { return S / N; };
    s.c1_ = 1.0 / box.n_max;
    s.c2_ = 1.0 / box.n_min;
    return s;
}

IncidenceSpec IncidenceSpec::michaelis_menten(const RationalLinear& contact, const NBox& box)
{
    require_box(box, true);
    auto [cmin, cmax] = scan_1d([&](double n) { return contact(n); }, box.n_min, box.n_max);
    if (!(cmin > 0.0)) throw std::invalid_argument("incidence: C(N) must be positive on the box");
    auto [dmin, dmax] = scan_1d([&](double n) { return contact.c + contact.d * n; }, box.n_min, box.n_max);
    if (!(dmin > 0.0)) throw std::invalid_argument("incidence: C(N) denominator vanishes on the box");

    IncidenceSpec s;
    s.family_ = Family::MichaelisMenten;
    s.name_ = "michaelis-menten";
    RationalLinear C = contact;
    s.phi_ = [C](double S, double N, double I) { return C(N) * S * I / N; };
    s.ds_ = [C](double, double N, double I) { return C(N) * I / N; };
    s.di_ = [C](double S, double N, double) { return C(N) * S / N; };
    s.dn_ = [C](double S, double N, double I) { return S * I * (C.deriv(N) / N - C(N) / (N * N)); };
    auto [rmin, rmax] = scan_1d([&](double n) { return C(n) / n; }, box.n_min, box.n_max);
    s.c1_ = rmin;
    s.c2_ = rmax;
    return s;
}

IncidenceSpec IncidenceSpec::holling2(double alpha, const NBox& box)
{
    require_box(box, false);
    if (alpha < 0.0) throw std::invalid_argument("incidence: holling2 alpha must be >= 0");
    IncidenceSpec s;
    s.family_ = Family::HollingII;
    s.name_ = "holling2";
    s.phi_ = [alpha](double S, double, double I) { return S * I / (1.0 + alpha * I); };
    s.ds_ = [alpha](double, double, double I) { return I / (1.0 + alpha * I); };
    s.dn_ = [](double, double, double) { return 0.0; };
    s.di_ = [alpha](double S, double, double I) {
        double den = 1.0 + alpha * I;
        return S / (den * den);
    };
    // phi/(S I) = 1/(1 + alpha I), monotone in I on [0, n_max].
    s.c1_ = 1.0 / (1.0 + alpha * box.n_max);
    s.c2_ = 1.0;
    return s;
}

IncidenceSpec IncidenceSpec::power_law(double p, double q, const NBox& box)
{
    require_box(box, false);
    if (!(p > 0.0) || !(q > 0.0)) throw std::invalid_argument("incidence: power-law exponents must be positive");
    IncidenceSpec s;
    s.family_ = Family::PowerLaw;
    s.name_ = "power-law";
    s.phi_ = [p, q](double S, double, double I) { return std::pow(I, p) * std::pow(S, q); };
    s.ds_ = [p, q](double S, double, double I) { return q * std::pow(I, p) * std::pow(S, q - 1.0); };
    s.dn_ = [](double, double, double) { return 0.0; };
    s.di_ = [p, q](double S, double, double I) { return p * std::pow(I, p - 1.0) * std::pow(S, q); };
    if (p == 1.0 && q == 1.0) {
        s.c1_ = s.c2_ = 1.0;
    } else {
        // phi/(S I) = I^(p-1) S^(q-1) has no positive lower bound as
        // I -> 0 when p > 1; report what an interior grid finds.
        auto [mn, mx] = scan_ratio(s.phi_, box, 64);
        s.c1_ = mn;
        s.c2_ = mx;
        s.constants_empirical_ = true;
    }
    return s;
}

IncidenceSpec IncidenceSpec::saturated_power(double p, double q, double alpha, const NBox& box)
{
    require_box(box, false);
    if (!(p > 0.0) || !(q > 0.0) || alpha < 0.0)
        throw std::invalid_argument("incidence: saturated-power needs p, q > 0 and alpha >= 0");
    IncidenceSpec s;
    s.family_ = Family::SaturatedPower;
    s.name_ = "saturated-power";
    s.phi_ = [p, q, alpha](double S, double, double I) {
        return S * std::pow(I, p) / (1.0 + alpha * std::pow(I, q));
    };
    s.ds_ = [p, q, alpha](double, double, double I) {
        return std::pow(I, p) / (1.0 + alpha * std::pow(I, q));
    };
    s.dn_ = [](double, double, double) { return 0.0; };
    s.di_ = [p, q, alpha](double S, double, double I) {
        double den = 1.0 + alpha * std::pow(I, q);
        return S * std::pow(I, p - 1.0) * (p + alpha * (p - q) * std::pow(I, q)) / (den * den);
    };
    if (p == 1.0) {
        s.c1_ = 1.0 / (1.0 + alpha * std::pow(box.n_max, q));
        s.c2_ = 1.0;
    } else {
        auto [mn, mx] = scan_1d(
            [&](double I) { return I <= 0.0 ? 0.0 : std::pow(I, p - 1.0) / (1.0 + alpha * std::pow(I, q)); },
            box.n_max / 2048.0, box.n_max);
        s.c1_ = mn;
        s.c2_ = mx;
        s.constants_empirical_ = true;
    }
    return s;
}

IncidenceSpec IncidenceSpec::custom(Evaluator phi, std::optional<Evaluator> dS,
                                    std::optional<Evaluator> dN, std::optional<Evaluator> dI,
                                    const NBox& box)
{
    require_box(box, false);
    if (!phi) throw std::invalid_argument("incidence: custom evaluator missing");
    IncidenceSpec s;
    s.family_ = Family::Custom;
    s.name_ = "custom";
    s.phi_ = phi;
    s.ds_ = dS ? *dS : Evaluator([phi](double S, double N, double I) {
        double h = fd_step(S);
        return (phi(S + h, N, I) - phi(S - h, N, I)) / (2.0 * h);
    });
    s.dn_ = dN ? *dN : Evaluator([phi](double S, double N, double I) {
        double h = fd_step(N);
        return (phi(S, N + h, I) - phi(S, N - h, I)) / (2.0 * h);
    });
    s.di_ = dI ? *dI : Evaluator([phi](double S, double N, double I) {
        double h = fd_step(I);
        return (phi(S, N, I + h) - phi(S, N, I - h)) / (2.0 * h);
    });
    auto [mn, mx] = scan_ratio(s.phi_, box, 64);
    s.c1_ = mn;
    s.c2_ = mx;
    s.constants_empirical_ = true;
    return s;
}

bool IncidenceSpec::n_independent() const
{
    switch (family_) {
        case Family::MassAction:
        case Family::HollingII:
        case Family::PowerLaw:
        case Family::SaturatedPower:
            return true;
        default:
            return false;
    }
}

} // namespace seirs
