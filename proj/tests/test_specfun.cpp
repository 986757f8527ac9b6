#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "cyclo/error.hpp"
#include "cyclo/specfun.hpp"

using namespace cyclo::specfun;

namespace {

// Reference values computed with mpmath at 40 digits on the exact binary64 arguments.
struct Reference {
    double x;
    double digamma;
    double log_gamma;
};

constexpr Reference kReference[] = {
    {1e-08, -100000000.57721564636, 18.420680738180208884},
    {0.001, -1000.5755719318102797, 6.9071788853838536617},
    {0.1, -10.423754940411076232, 2.252712651734205902},
    {0.25, -4.2274535333762654081, 1.2880225246980774574},
    {0.3, -3.5025242222001331249, 1.0957979948180755606},
    {0.3333333333333333, -3.1320337800208065098, 0.98542064692776712714},
    {0.5, -1.9635100260214234794, 0.57236494292470008707},
    {0.7, -1.2200235536979347406, 0.26086724653166656857},
    {0.9, -0.7549269499470513492, 0.066376239734742954426},
    {0.999, -0.57886180210864542792, 0.00057803853289138023817},
    {0.9999999, -0.57721582939495147942, 5.7721574684441928263e-8},
    {1.0, -0.57721566490153286061, 0.0},
    {1.25, -0.22745353337626540809, -0.098271836421813161464},
    {2.0, 0.42278433509846713939, 0.0},
    {2.5, 0.70315664064524318723, 0.28468287047291915963},
    {3.7, 1.1671535393615114409, 1.4280723266653881292},
    {9.99, 2.250700372831201122, 12.77931521435019336},
    {15.5, 2.7082352425903654326, 26.536914491115613624},
    {123.25, 4.8101525319648188803, 468.61448295051664423},
};

double rel_err(double got, double want)
{
    return want == 0.0 ? std::abs(got) : std::abs(got - want) / std::abs(want);
}

}  // namespace

TEST_CASE("constants")
{
    CHECK(kConstants.euler_gamma == doctest::Approx(0.57721566490153286).epsilon(1e-16));
    CHECK(std::abs(kConstants.log_2pi - (std::log(2.0) + std::log(std::numbers::pi))) < 1e-15);
}

TEST_CASE("cot_pi examples")
{
    CHECK(cot_pi(0.5) == 0.0);
    CHECK(std::abs(cot_pi(0.25) - 1.0) < 1e-15);
    CHECK(std::abs(cot_pi(1.0 / 3.0) - 0.5773502691896258) < 1e-15);
}

TEST_CASE("cot_pi is antisymmetric about 1/2")
{
    for (int k = 1; k < 1024; ++k) {
        const double x = k / 1024.0;
        REQUIRE(cot_pi(1.0 - x) == -cot_pi(x));
    }
}

TEST_CASE("cot_pi and sin_pi reject arguments outside (0, 1)")
{
    for (double x : {0.0, 1.0, -0.25, 1.5, std::numeric_limits<double>::quiet_NaN()}) {
        CHECK_THROWS_AS(cot_pi(x), cyclo::PreconditionError);
        CHECK_THROWS_AS(sin_pi(x), cyclo::PreconditionError);
    }
}

TEST_CASE("digamma closed forms")
{
    CHECK(rel_err(digamma(1.0), -std::numbers::egamma) < 1e-15);
    CHECK(rel_err(digamma(0.5), -1.9635100260214235) < 1e-15);
}

TEST_CASE("log_gamma closed forms")
{
    CHECK(log_gamma(1.0) == 0.0);
    CHECK(log_gamma(2.0) == 0.0);
    CHECK(rel_err(log_gamma(0.5), 0.5723649429247001) < 1e-15);
    const double third = log_gamma(1.0 / 3.0) + log_gamma(2.0 / 3.0);
    CHECK(std::abs(third - (std::log(std::numbers::pi) - std::log(std::sin(std::numbers::pi / 3.0)))) < 1e-14);
}

TEST_CASE("digamma and log_gamma against high-precision references")
{
    for (const auto& ref : kReference) {
        CAPTURE(ref.x);
        const double tol = ref.x <= 1.0 ? 1e-14 : 1e-13;
        CHECK(rel_err(digamma(ref.x), ref.digamma) < tol);
        CHECK(rel_err(log_gamma(ref.x), ref.log_gamma) < tol);
    }
}

TEST_CASE("digamma and log_gamma reject non-positive arguments")
{
    for (double x : {0.0, -1.0, -0.5, std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::infinity()}) {
        CHECK_THROWS_AS(digamma(x), cyclo::PreconditionError);
        CHECK_THROWS_AS(log_gamma(x), cyclo::PreconditionError);
    }
}

TEST_CASE("digamma reflection: psi(1-x) - psi(x) = pi cot(pi x)")
{
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 10'000; ++i) {
        const double x = unit(rng);
        if (x == 0.0) {
            continue;
        }
        const double residual = digamma(1.0 - x) - digamma(x) - std::numbers::pi * cot_pi(x);
        const double mirror = 1.0 - x;
        if (x >= 0.5) {
            // 1 - x is exact here, so the residual is exactly antisymmetric.
            REQUIRE(digamma(1.0 - mirror) - digamma(mirror) - std::numbers::pi * cot_pi(mirror) == -residual);
        }
        // Scale at the representative in (0, 1/2]; for x > 1/2 that is the exact mirror image.
        REQUIRE_MESSAGE(std::abs(residual) <= 1e-12 * (1.0 + std::abs(digamma(std::min(x, mirror)))), x);
    }
}

TEST_CASE("digamma reflection near 1 is limited by the rounding of psi(1 - x)")
{
    // psi(1 - x) is about -48485 here, so one of its ulps exceeds 1e-12 (1 + |psi(x)|).
    const double x = 0.99997937064658693;
    const double residual = digamma(1.0 - x) - digamma(x) - std::numbers::pi * cot_pi(x);
    CHECK(std::abs(residual) <= 1e-12 * (1.0 + std::abs(digamma(1.0 - x))));
    CHECK(std::nextafter(std::abs(digamma(1.0 - x)), 0.0) < std::abs(digamma(1.0 - x)) - 1e-12 * (1.0 + std::abs(digamma(x))));
}

TEST_CASE("digamma recurrence: psi(x+1) - psi(x) = 1/x")
{
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> dist(0.0, 10.0);
    for (int i = 0; i < 10'000; ++i) {
        const double x = dist(rng);
        if (x == 0.0) {
            continue;
        }
        // Long double keeps the test's own subtraction from adding an ulp of |psi(x)|.
        const long double lhs = static_cast<long double>(digamma(x + 1.0)) - digamma(x) - 1.0L / x;
        REQUIRE_MESSAGE(std::abs(lhs) <= 1e-13L, x);
    }
}

TEST_CASE("log_gamma reflection: logG(x) + logG(1-x) = log pi - log sin(pi x)")
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 10'000; ++i) {
        const double x = unit(rng);
        if (x == 0.0) {
            continue;
        }
        const double lhs = log_gamma(x) + log_gamma(1.0 - x);
        const double rhs = std::log(std::numbers::pi) - std::log(sin_pi(x));
        REQUIRE_MESSAGE(std::abs(lhs - rhs) <= 1e-12, x);
    }
}

TEST_CASE("log_gamma central difference matches digamma on [0.1, 5]")
{
    constexpr double h = 1e-6;
    for (double x = 0.1; x <= 5.0; x += 0.01) {
        const double fd = (log_gamma(x + h) - log_gamma(x - h)) / (2 * h);
        REQUIRE_MESSAGE(std::abs(fd - digamma(x)) < 1e-6, x);
    }
}
