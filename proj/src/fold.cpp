#include "cyclo/fold.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cyclo/error.hpp"
#include "cyclo/specfun.hpp"

namespace cyclo::transform {

namespace {

const double kLogPi = std::log(std::numbers::pi);

// Odd part on the lower half, 1 <= a < q/2.
double lower_odd_part(FoldKind kind, std::uint64_t a, std::uint64_t q)
{
    const double x = static_cast<double>(a) / static_cast<double>(q);
    switch (kind) {
    case FoldKind::identity:
        return -static_cast<double>(q - 2 * a) / static_cast<double>(q);
    case FoldKind::cotangent:
        return -std::numbers::pi * specfun::cot_pi(x);
    case FoldKind::loggamma:
        return 2.0 * specfun::log_gamma(x) + std::log(specfun::sin_pi(x)) - kLogPi;
    }
    throw InternalError("unknown fold kind");
}

void check_nonvanishing(std::span<const Complex> sums)
{
    double largest = 0.0;
    for (const auto& z : sums) {
        largest = std::max(largest, std::norm(z));
    }
    const double floor = kVanishingRatio * kVanishingRatio * largest;
    for (std::size_t t = 0; t < sums.size(); ++t) {
        const double squared = std::norm(sums[t]);
        if (!std::isfinite(squared) || squared < floor) {
            throw InternalError("character sum " + std::to_string(t) + " vanishes (|S| = " +
                                std::to_string(std::sqrt(squared)) + ", max " + std::to_string(std::sqrt(largest)) + ")");
        }
    }
}

}  // namespace

DifFold dif_fold(std::span<const double> f_values, const arith::PrimeContext& ctx, Sign sign)
{
    const std::uint64_t q = ctx.q();
    const std::size_t m = ctx.m();
    if (f_values.size() != q - 1) {
        throw PreconditionError("dif_fold: expected " + std::to_string(q - 1) + " values, got " +
                                std::to_string(f_values.size()));
    }
    DifFold fold{ComplexSequence(m), ComplexSequence(m)};
    for (std::size_t k = 0; k < m; ++k) {
        fold.even[k] = f_values[k] + f_values[k + m];
        fold.odd[k] = unit_root(k, q - 1, sign) * (f_values[k] - f_values[k + m]);
    }
    return fold;
}

double odd_part(FoldKind kind, std::uint64_t a, std::uint64_t q)
{
    if (a == 0 || a >= q) {
        throw PreconditionError("odd_part: residue out of range");
    }
    return 2 * a < q ? lower_odd_part(kind, a, q) : -lower_odd_part(kind, q - a, q);
}

ComplexSequence odd_fold(const arith::PrimeContext& ctx, FoldKind kind, Sign sign)
{
    const std::uint64_t q = ctx.q();
    const std::size_t m = ctx.m();
    ComplexSequence c(m);
    for (std::size_t k = 0; k < m; ++k) {
        c[k] = unit_root(k, q - 1, sign) * odd_part(kind, ctx.power(k), q);
    }
    return c;
}

ComplexSequence odd_character_sums(const arith::PrimeContext& ctx, FoldKind kind, Sign sign, const FftPlan& plan)
{
    if (plan.size() != ctx.m()) {
        throw PreconditionError("odd_character_sums: plan length does not match (q-1)/2");
    }
    const ComplexSequence c = odd_fold(ctx, kind, sign);
    ComplexSequence sums = plan(c, sign);
    check_nonvanishing(sums);
    return sums;
}

ComplexSequence odd_character_sums(const arith::PrimeContext& ctx, FoldKind kind, Sign sign)
{
    return odd_character_sums(ctx, kind, sign, FftPlan(ctx.m()));
}

}  // namespace cyclo::transform
