#pragma once

#include <numbers>

namespace cyclo::specfun {

struct RealConstantSet {
    double euler_gamma;
    double pi;
    double log_2pi;
};

inline constexpr RealConstantSet kConstants{
    std::numbers::egamma,
    std::numbers::pi,
    1.8378770664093454835606594728112,  // log(2) + log(pi)
};

/// cot(pi x) for 0 < x < 1. Exactly 0 at x = 1/2 and antisymmetric about 1/2.
double cot_pi(double x);

/// sin(pi x) for 0 < x < 1, evaluated on the half nearer to 0.
double sin_pi(double x);

/// Digamma psi(x) = Gamma'(x) / Gamma(x) for x > 0.
double digamma(double x);

/// log Gamma(x) for x > 0.
double log_gamma(double x);

}  // namespace cyclo::specfun
