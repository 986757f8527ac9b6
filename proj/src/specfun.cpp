#include "cyclo/specfun.hpp"

#include <array>
#include <cmath>
#include <string>

#include "cyclo/error.hpp"

namespace cyclo::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

// Asymptotic expansions switch in at this argument.
constexpr double kAsymptoticThreshold = 10.0;

// B_2, B_4, ..., B_14
constexpr std::array<double, 7> kBernoulliEven{
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0,
};

void require_open_unit(double x, const char* name)
{
    if (!(x > 0.0 && x < 1.0)) {
        throw PreconditionError(std::string(name) + ": argument must lie in (0, 1), got " + std::to_string(x));
    }
}

void require_positive(double x, const char* name)
{
    if (!(x > 0.0) || std::isinf(x)) {
        throw PreconditionError(std::string(name) + ": argument must be positive and finite, got " +
                                std::to_string(x));
    }
}

// zeta(k) - 1 for k = 0..kZetaTerms-1 (entries 0 and 1 unused).
constexpr int kZetaTerms = 48;

const std::array<double, kZetaTerms>& zeta_minus_one()
{
    static const std::array<double, kZetaTerms> table = [] {
        std::array<double, kZetaTerms> z{};
        constexpr int kCut = 20;
        for (int k = 2; k < kZetaTerms; ++k) {
            const double s = k;
            // Euler-Maclaurin tail for sum_{n >= kCut} n^-s.
            const double n = kCut;
            double tail = std::pow(n, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(n, -s);
            double rising = s;  // s (s+1) ... (s+2j-2)
            double factorial = 2.0;  // (2j)!
            for (int j = 1; j <= 6; ++j) {
                tail += kBernoulliEven[j - 1] / factorial * rising * std::pow(n, -s - 2.0 * j + 1.0);
                rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
                factorial *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
            }
            double sum = tail;
            for (int m = kCut - 1; m >= 2; --m) {
                sum += std::pow(static_cast<double>(m), -s);
            }
            z[k] = sum;
        }
        return z;
    }();
    return table;
}

// log Gamma(1 + y) for |y| <= 1/2 from the Taylor series about 1, with the
// zeta(k) = 1 part summed in closed form as y - log1p(y).
double log_gamma_1p(double y)
{
    const auto& zm1 = zeta_minus_one();
    double series = 0.0;
    for (int k = kZetaTerms - 1; k >= 2; --k) {
        series = series * -y + zm1[k] / k;
    }
    series *= y * y;
    return -std::numbers::egamma * y + (y - std::log1p(y)) + series;
}

double log_gamma_stirling(double x)
{
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double correction = 0.0;
    for (int j = static_cast<int>(kBernoulliEven.size()); j >= 1; --j) {
        correction = correction * inv2 + kBernoulliEven[j - 1] / ((2.0 * j) * (2.0 * j - 1.0));
    }
    correction *= inv;
    return (x - 0.5) * std::log(x) - x + 0.5 * kConstants.log_2pi + correction;
}

}  // namespace

double cot_pi(double x)
{
    require_open_unit(x, "cot_pi");
    if (x == 0.5) {
        return 0.0;
    }
    if (x > 0.5) {
        return -cot_pi(1.0 - x);
    }
    return std::cos(kPi * x) / std::sin(kPi * x);
}

double sin_pi(double x)
{
    require_open_unit(x, "sin_pi");
    return std::sin(kPi * (x > 0.5 ? 1.0 - x : x));
}

double digamma(double x)
{
    require_positive(x, "digamma");
    // Long double so the 1/x-dominated shift near 0 rounds only once.
    long double y = x;
    long double shift = 0.0L;
    if (x < kAsymptoticThreshold) {
        const int steps = static_cast<int>(std::ceil(kAsymptoticThreshold - x));
        for (int i = steps - 1; i >= 0; --i) {
            shift += 1.0L / (y + i);
        }
        y += steps;
    }
    const long double inv2 = 1.0L / (y * y);
    long double tail = 0.0L;
    for (int j = static_cast<int>(kBernoulliEven.size()); j >= 1; --j) {
        tail = tail * inv2 + static_cast<long double>(kBernoulliEven[j - 1]) / (2.0L * j);
    }
    tail *= inv2;
    return static_cast<double>(std::log(y) - 0.5L / y - tail - shift);
}

double log_gamma(double x)
{
    require_positive(x, "log_gamma");
    if (x < 0.5) {
        return log_gamma_1p(x) - std::log(x);
    }
    if (x <= 1.5) {
        return log_gamma_1p(x - 1.0);
    }
    if (x <= 2.5) {
        const double y = x - 2.0;
        return log_gamma_1p(y) + std::log1p(y);
    }
    if (x >= kAsymptoticThreshold) {
        return log_gamma_stirling(x);
    }
    // Walk down into (1.5, 2.5]: log Gamma(x) = log Gamma(x - n) + log prod (x - i).
    double product = 1.0;
    while (x > 2.5) {
        x -= 1.0;
        product *= x;
    }
    const double y = x - 2.0;
    return log_gamma_1p(y) + std::log1p(y) + std::log(product);
}

}  // namespace cyclo::specfun
