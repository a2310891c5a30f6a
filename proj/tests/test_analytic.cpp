#include "slicelab/analytic.hpp"
#include "slicelab/errors.hpp"
#include "slicelab/measure.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "test_util.hpp"

using namespace slicelab;
using namespace testutil;

namespace {

// Fixed-step composite-Simpson oracle for I_p: no adaptivity, no shared code
// with the library quadrature. Integrates per period out to `periods` * pi
// and adds the mean-value tail; accurate to ~1e-10 for the settings used.
double sinc_power_oracle(int p, int periods, int steps_per_period) {
    const double pi = std::numbers::pi;
    auto f = [p](double t) {
        if (t == 0.0) return 1.0;
        return std::pow(std::fabs(std::sin(t) / t), p);
    };
    double sum = 0.0;
    for (int k = 0; k < periods; ++k) {
        const double a = k * pi;
        const double h = pi / steps_per_period;
        double acc = f(a) + f(a + pi);
        for (int i = 1; i < steps_per_period; ++i)
            acc += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
        sum += acc * h / 3.0;
    }
    // Wallis mean of sin^p over a period
    double w = (p % 2 == 0) ? pi / 2.0 : 1.0;
    for (int k = (p % 2 == 0) ? 2 : 3; k <= p; k += 2) w *= (k - 1.0) / k;
    const double mean = 2.0 * w / pi;
    const double T = periods * pi;
    return 2.0 / pi * (sum + mean * std::pow(T, 1.0 - p) / (p - 1));
}

}  // namespace

TEST_CASE("sinc power integrals hit the known values") {
    const QuadratureResult i2 = sinc_power_integral(2);
    CHECK(std::fabs(i2.value - 1.0) <= 1e-9 + i2.error_bound);

    const QuadratureResult i4 = sinc_power_integral(4);
    CHECK(std::fabs(i4.value - 2.0 / 3.0) <= 1e-9 + i4.error_bound);
    CHECK(i4.error_bound <= 1e-10);
    CHECK(i4.panel_count > 0);
}

TEST_CASE("I_3 matches the composite-Simpson oracle") {
    const double oracle = sinc_power_oracle(3, 2000, 512);
    CHECK(oracle == doctest::Approx(0.7693194775647050).epsilon(1e-9));
    const QuadratureResult i3 = sinc_power_integral(3);
    CHECK(std::fabs(i3.value - oracle) <= 1e-9 + i3.error_bound);
}

TEST_CASE("I_p sits under sqrt(2)/sqrt(p), equality only at p = 2") {
    double prev = 2.0;
    for (int p = 2; p <= 10; ++p) {
        const QuadratureResult r = sinc_power_integral(p);
        const double bound = std::numbers::sqrt2 / std::sqrt(double(p));
        CHECK(r.value <= bound + 1e-9);
        if (p == 2)
            CHECK(std::fabs(r.value - bound) <= 1e-9);
        else
            CHECK(r.value < bound - 1e-2);
        CHECK(r.value < prev);  // strictly decreasing in p
        prev = r.value;
    }
}

TEST_CASE("error bounds are honest under tolerance halving") {
    for (int p : {2, 3, 5}) {
        for (double tol : {1e-6, 1e-8}) {
            const QuadratureResult coarse = sinc_power_integral(p, tol);
            const QuadratureResult fine = sinc_power_integral(p, tol / 2);
            CHECK(std::fabs(coarse.value - fine.value) <= coarse.error_bound);
        }
    }
    for (const auto& raw : {std::initializer_list<long>{1, 1, 1, 1}, {5, 3, 2, 1},
                            {9, 1, 1, 1}, {2, 2, 1, 1, 1}}) {
        for (double tol : {1e-6, 1e-8}) {
            const QuadratureResult coarse = slice_volume_quadrature(ratvec(raw), tol);
            const QuadratureResult fine = slice_volume_quadrature(ratvec(raw), tol / 2);
            CHECK(std::fabs(coarse.value - fine.value) <= coarse.error_bound);
        }
    }
}

TEST_CASE("tolerance and argument guards") {
    CHECK_THROWS_AS(sinc_power_integral(1), Error);
    CHECK_THROWS_AS(sinc_power_integral(4, 1e-13), ToleranceUnreachable);
    CHECK_THROWS_AS(slice_volume_quadrature(ratvec({1, 1}), 1e-13), ToleranceUnreachable);
    CHECK_THROWS_AS(slice_volume_quadrature(RatVec{Rational(0), Rational(0)}, 1e-8),
                    AllZeroNormal);
}

TEST_CASE("slice volumes by quadrature") {
    SUBCASE("all-ones normal gives 4/3") {
        const QuadratureResult r = slice_volume_quadrature(ratvec({1, 1, 1, 1}));
        CHECK(std::fabs(r.value - 4.0 / 3.0) <= 1e-8 + r.error_bound);
    }
    SUBCASE("the planar diagonal attains sqrt(2)") {
        const QuadratureResult r = slice_volume_quadrature(ratvec({1, 1}));
        CHECK(std::fabs(r.value - std::numbers::sqrt2) <= 1e-8 + r.error_bound);
    }
    SUBCASE("a single surviving factor is exact") {
        const QuadratureResult r = slice_volume_quadrature(ratvec({1, 0, 0, 0}));
        CHECK(r.value == 1.0);
        CHECK(r.error_bound == 0.0);
    }
    SUBCASE("zero entries drop out of the product") {
        const QuadratureResult a = slice_volume_quadrature(ratvec({2, 3, 0, 0}));
        const QuadratureResult b = slice_volume_quadrature(ratvec({2, 3}));
        CHECK(a.value == b.value);
    }
    SUBCASE("rational normals are rescaled") {
        const QuadratureResult a = slice_volume_quadrature(
            RatVec{Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)});
        const QuadratureResult b = slice_volume_quadrature(ratvec({1, 1, 1, 1}));
        CHECK(a.value == b.value);
    }
}

TEST_CASE("quadrature is bit-identical under permutation and sign flips") {
    const QuadratureResult base = slice_volume_quadrature(ratvec({4, 2, 7, 1}));
    CHECK(slice_volume_quadrature(ratvec({7, 1, 2, 4})).value == base.value);
    CHECK(slice_volume_quadrature(ratvec({-4, 2, -7, 1})).value == base.value);
    CHECK(slice_volume_quadrature(ratvec({1, 2, 4, 7})).value == base.value);
}

TEST_CASE("quadrature cross-checks the exact volume") {
    for (const auto& raw : {std::initializer_list<long>{2, 1, 1, 1}, {3, 1, 1, 1},
                            {5, 2, 1, 1}, {9, 8, 7, 6}}) {
        const Hyperplane h = normal(raw);
        const double exact = slice_volume_exact(slice_vertices(h)).to_double();
        const QuadratureResult r = slice_volume_quadrature(to_ratvec(h.normal()), 1e-8);
        CAPTURE(to_string(to_ratvec(h.normal())));
        CHECK(std::fabs(r.value - exact) <= 1e-6);
    }
}

TEST_CASE("volume of (2,1,1,1) agrees with a Monte Carlo slab estimate") {
    // thick-slab counting oracle: fraction of cube points within distance
    // h/2 of the hyperplane, divided by the slab width
    const double target = 23.0 * std::sqrt(7.0) / 48.0;
    std::mt19937_64 rng(20240915);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    const double a[4] = {2, 1, 1, 1};
    const double norm = std::sqrt(7.0);
    const double h = 0.02;
    const long n = 2'000'000;
    long hits = 0;
    for (long i = 0; i < n; ++i) {
        const double d = a[0] * u(rng) + a[1] * u(rng) + a[2] * u(rng) + a[3] * u(rng);
        if (std::fabs(d) / norm <= h / 2) ++hits;
    }
    const double estimate = double(hits) / (double(n) * h);
    CHECK(estimate == doctest::Approx(target).epsilon(0.02));

    const QuadratureResult r = slice_volume_quadrature(ratvec({2, 1, 1, 1}));
    CHECK(std::fabs(r.value - target) <= 1e-8 + r.error_bound);
}

TEST_CASE("a 5-D quadrature volume survives a Monte Carlo slab check") {
    // no exact route exists above n = 4, so cross-check one case by counting
    const RatVec normal = testutil::ratvec({3, 2, 2, 1, 1});
    const QuadratureResult r = slice_volume_quadrature(normal, 1e-8);

    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    const double a[5] = {3, 2, 2, 1, 1};
    const double norm = std::sqrt(3. * 3 + 2 * 2 + 2 * 2 + 1 + 1);
    const double h = 0.02;
    const long n = 2'000'000;
    long hits = 0;
    for (long i = 0; i < n; ++i) {
        double d = 0;
        for (int k = 0; k < 5; ++k) d += a[k] * u(rng);
        if (std::fabs(d) / norm <= h / 2) ++hits;
    }
    const double estimate = double(hits) / (double(n) * h);
    CHECK(r.value == doctest::Approx(estimate).epsilon(0.02));
}

TEST_CASE("ball bound reports") {
    const BallBoundReport all_ones = ball_bound_check(ratvec({1, 1, 1, 1}));
    CHECK(all_ones.ok);
    CHECK(all_ones.small_entry_hypothesis);

    const BallBoundReport diag = ball_bound_check(ratvec({1, 1}));
    CHECK(diag.ok);  // sits at the upper endpoint

    const BallBoundReport skew = ball_bound_check(ratvec({3, 1, 1, 1}));
    CHECK(skew.ok);
    CHECK(!skew.small_entry_hypothesis);  // 3/sqrt(12) > 1/sqrt(2)
}
