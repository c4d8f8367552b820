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

#include "seirs/hypotheses.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "seirs/rng.hpp"

namespace seirs {

namespace {

std::string point_str(double S, double N, double I)
{
    std::ostringstream os;
    os << "(S=" << S << ", N=" << N << ", I=" << I << ")";
    return os.str();
}

void fail(HypothesisCheck& c, double S, double N, double I, const std::string& what)
{
    if (!c.passed) return; // keep the first witness
    c.passed = false;
    c.witness = {S, N, I};
    c.has_witness = true;
    c.detail = what + " at " + point_str(S, N, I);
}

} // namespace

HypothesisReport check_hypotheses(const IncidenceSpec& inc, const NBox& box, int grid_density)
{
    if (!(box.n_max > 0.0) || box.n_min > box.n_max)
        throw std::invalid_argument("check_hypotheses: degenerate box");
    if (grid_density < 2) throw std::invalid_argument("check_hypotheses: grid density must be >= 2");

    HypothesisReport rep;
    const int g = grid_density;
    const bool n_spread = box.n_max > box.n_min;
    const int gn = n_spread ? g : 1;

    std::vector<double> s_axis(g + 1), n_axis(gn);
    for (int i = 0; i <= g; ++i) s_axis[i] = box.n_max * i / g;
    for (int i = 0; i < gn; ++i)
        n_axis[i] = n_spread ? box.n_min + (box.n_max - box.n_min) * i / (gn - 1) : box.n_min;

    const double scale = std::max(1.0, std::abs(inc.phi(box.n_max, n_axis.back(), box.n_max)));
    const double slack = 1e-12 * scale;

    // Boundary vanishing.
    for (double N : n_axis) {
        for (double v : s_axis) {
            if (std::abs(inc.phi(0.0, N, v)) > slack) fail(rep.vanishes_on_boundary, 0.0, N, v, "phi(0,N,I) != 0");
            if (std::abs(inc.phi(v, N, 0.0)) > slack) fail(rep.vanishes_on_boundary, v, N, 0.0, "phi(S,N,0) != 0");
        }
    }

    // Saturation ratio phi/(S I) on the interior grid.
    double rmin = 0.0, rmax = 0.0;
    bool first = true;
    for (double N : n_axis) {
        for (int a = 1; a <= g; ++a) {
            for (int c = 1; c <= g; ++c) {
                double S = s_axis[a], I = s_axis[c];
                double ratio = inc.phi(S, N, I) / (S * I);
                if (first || ratio < rmin) rmin = ratio;
                if (first || ratio > rmax) rmax = ratio;
                first = false;
            }
        }
    }
    rep.tight_c1 = rmin;
    rep.tight_c2 = rmax;
    {
        std::ostringstream os;
        os << "empirical ratio range [" << rmin << ", " << rmax << "], declared [" << inc.c1() << ", "
           << inc.c2() << "]";
        rep.ratio_bounded.detail = os.str();
        double tol1 = 1e-9 * std::max(1.0, std::abs(rmin));
        double tol2 = 1e-9 * std::max(1.0, std::abs(rmax));
        if (!(rmin > 0.0)) {
            rep.ratio_bounded.passed = false;
            rep.ratio_bounded.detail += "; ratio not positive on the grid";
        } else if (inc.c1() > rmin + tol1 || inc.c2() < rmax - tol2) {
            rep.ratio_bounded.passed = false;
            rep.ratio_bounded.detail += "; declared constants do not bound the grid ratio";
        }
    }

    // Monotonicity: nondecreasing in S and I, nonincreasing in N.
    for (double N : n_axis) {
        for (int a = 0; a <= g; ++a) {
            for (int c = 0; c < g; ++c) {
                double I = s_axis[a];
                if (inc.phi(s_axis[c + 1], N, I) < inc.phi(s_axis[c], N, I) - slack)
                    fail(rep.monotone, s_axis[c + 1], N, I, "phi decreasing in S");
                double S = s_axis[a];
                if (inc.phi(S, N, s_axis[c + 1]) < inc.phi(S, N, s_axis[c]) - slack)
                    fail(rep.monotone, S, N, s_axis[c + 1], "phi decreasing in I");
            }
        }
    }
    for (int b = 0; b + 1 < gn; ++b) {
        for (int a = 0; a <= g; ++a) {
            for (int c = 0; c <= g; ++c) {
                if (inc.phi(s_axis[a], n_axis[b + 1], s_axis[c]) >
                    inc.phi(s_axis[a], n_axis[b], s_axis[c]) + slack)
                    fail(rep.monotone, s_axis[a], n_axis[b + 1], s_axis[c], "phi increasing in N");
            }
        }
    }

    // phi/I nonincreasing in I.
    for (double N : n_axis) {
        for (int a = 0; a <= g; ++a) {
            double S = s_axis[a];
            for (int c = 1; c < g; ++c) {
                double i0 = s_axis[c], i1 = s_axis[c + 1];
                if (inc.phi(S, N, i1) / i1 > inc.phi(S, N, i0) / i0 + slack)
                    fail(rep.ratio_nonincreasing_in_i, S, N, i1, "phi/I increasing in I");
            }
        }
    }

    // Partials against centered differences at random interior points.
    {
        Lcg rng(0x5e125u);
        const double floor = box.n_max / g;
        int checked = 0;
        for (int k = 0; k < 200; ++k) {
            double S = floor + rng.uniform() * (box.n_max - floor);
            double I = floor + rng.uniform() * (box.n_max - floor);
            double N = n_spread ? box.n_min + rng.uniform() * (box.n_max - box.n_min) : box.n_min;
            struct Probe {
                double analytic;
                double fd;
                const char* label;
            };
            auto diff = [&](auto&& shift) {
                double h = 1e-6 * scale;
                return (shift(h) - shift(-h)) / (2.0 * h);
            };
            Probe probes[3] = {
                {inc.dphi_dS(S, N, I), diff([&](double h) { return inc.phi(S + h, N, I); }), "dphi/dS"},
                {inc.dphi_dN(S, N, I), diff([&](double h) { return inc.phi(S, N + h, I); }), "dphi/dN"},
                {inc.dphi_dI(S, N, I), diff([&](double h) { return inc.phi(S, N, I + h); }), "dphi/dI"},
            };
            for (const auto& p : probes) {
                double err = std::abs(p.analytic - p.fd) / std::max(1.0, std::abs(p.fd));
                if (err > 1e-5)
                    fail(rep.partials_consistent, S, N, I,
                         std::string(p.label) + " disagrees with centered differences");
            }
            ++checked;
        }
        if (rep.partials_consistent.passed) {
            std::ostringstream os;
            os << checked << " random interior points within 1e-5";
            rep.partials_consistent.detail = os.str();
        }
    }

    return rep;
}

} // namespace seirs
