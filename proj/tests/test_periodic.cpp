#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "seirs/periodic.hpp"
#include "seirs/rng.hpp"

using seirs::Harmonic;
using seirs::Lcg;
using seirs::PeriodicCoefficient;

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

PeriodicCoefficient forced_beta()
{
    // 6.9 (1 + 0.6 cos(2 pi t))
    return {6.9, {{4.14, 1, 0.0}}, 1.0};
}

} // namespace

TEST_CASE("constant coefficient: eval, mean, extrema")
{
    PeriodicCoefficient f(2.0, 1.0);
    CHECK(f(0.37) == 2.0);
    CHECK(f.mean() == 2.0);
    auto [lo, hi] = f.extrema();
    CHECK(lo == 2.0);
    CHECK(hi == 2.0);
}

TEST_CASE("single harmonic: eval at the cosine extremes")
{
    PeriodicCoefficient f = forced_beta();
    CHECK(f(0.0) == doctest::Approx(11.04).epsilon(1e-13));
    CHECK(f(0.5) == doctest::Approx(2.76).epsilon(1e-13));
    CHECK(f.mean() == 6.9);

    auto [lo, hi] = f.extrema();
    CHECK(lo == doctest::Approx(2.76).epsilon(1e-14));
    CHECK(hi == doctest::Approx(11.04).epsilon(1e-14));
}

TEST_CASE("phase-shifted harmonic integrates to its constant term")
{
    PeriodicCoefficient f(1.0, {{0.5, 1, 1.1}}, 1.0);
    CHECK(f.mean() == 1.0);
    CHECK(f.integral(0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("multi-harmonic extrema agree with a dense brute-force scan")
{
    PeriodicCoefficient f(1.0, {{0.3, 1, 0.0}, {0.1, 2, 0.0}}, 1.0);

    // Oracle: exhaustive evaluation at one million points.
    double lo = f(0.0), hi = lo;
    const int n = 1'000'000;
    for (int i = 1; i < n; ++i) {
        double v = f(static_cast<double>(i) / n);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }

    auto ext = f.extrema();
    CHECK(ext.lower == doctest::Approx(lo).epsilon(1e-6));
    CHECK(ext.upper == doctest::Approx(hi).epsilon(1e-6));
    CHECK(ext.lower <= lo + 1e-9);
    CHECK(ext.upper >= hi - 1e-9);
}

TEST_CASE("periodicity is exact at representable times")
{
    PeriodicCoefficient f(1.0, {{0.3, 1, 0.4}, {0.1, 3, 2.0}}, 1.0);
    Lcg rng(7);
    for (int i = 0; i < 1000; ++i) {
        // Dyadic t in [0, 1) so that t + 1 is exactly representable.
        double t = static_cast<double>(rng.next() >> 44) * 0x1.0p-20;
        CHECK(f(t) == f(t + 1.0));
    }
}

TEST_CASE("periodicity for a non-unit period")
{
    PeriodicCoefficient f(0.7, {{0.2, 2, 0.9}}, 0.73);
    Lcg rng(11);
    for (int i = 0; i < 1000; ++i) {
        double t = rng.uniform() * 10.0;
        CHECK(f(t) == doctest::Approx(f(t + 0.73)).epsilon(1e-12));
    }
}

TEST_CASE("extrema bound every sample and contain the mean")
{
    PeriodicCoefficient f(1.0, {{0.3, 1, 0.0}, {0.1, 2, 1.3}, {0.05, 5, 0.2}}, 1.0);
    auto [lo, hi] = f.extrema();
    Lcg rng(3);
    for (int i = 0; i < 1000; ++i) {
        double v = f(rng.uniform());
        CHECK(v >= lo - 1e-9);
        CHECK(v <= hi + 1e-9);
    }
    CHECK(f.mean() >= lo);
    CHECK(f.mean() <= hi);
}

TEST_CASE("closed-form integral matches composite Simpson")
{
    PeriodicCoefficient f(1.4, {{0.5, 1, 0.3}, {0.2, 4, 1.0}}, 1.0);
    const double a = 0.2, b = 0.7;
    const int n = 4096;
    const double h = (b - a) / n;
    double simpson = f(a) + f(b);
    for (int i = 1; i < n; ++i) simpson += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    simpson *= h / 3.0;
    CHECK(f.integral(a, b) == doctest::Approx(simpson).epsilon(1e-10));
}

TEST_CASE("sum of coefficients keeps period and adds pointwise")
{
    PeriodicCoefficient mu(2.0, {{0.4, 1, 0.0}}, 1.0);
    PeriodicCoefficient eps(1.0, {{0.1, 2, 0.5}}, 1.0);
    PeriodicCoefficient sum = mu + eps;
    CHECK(sum.mean() == 3.0);
    for (double t : {0.0, 0.13, 0.5, 0.99}) CHECK(sum(t) == doctest::Approx(mu(t) + eps(t)).epsilon(1e-14));

    PeriodicCoefficient other_period(1.0, 2.0);
    CHECK_THROWS_AS((void)(mu + other_period), std::invalid_argument);
}

TEST_CASE("construction rejects bad periods and frequency multiples")
{
    CHECK_THROWS_AS(PeriodicCoefficient(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(PeriodicCoefficient(1.0, {{0.1, 0, 0.0}}, 1.0), std::invalid_argument);
}

TEST_CASE("eval formula: constant plus sum of cosines")
{
    PeriodicCoefficient f(0.3, {{0.2, 2, 0.7}, {0.05, 3, 1.9}}, 1.0);
    for (double t : {0.0, 0.21, 0.64}) {
        double expected = 0.3 + 0.2 * std::cos(kTwoPi * 2 * t + 0.7) + 0.05 * std::cos(kTwoPi * 3 * t + 1.9);
        CHECK(f(t) == doctest::Approx(expected).epsilon(1e-14));
    }
}
