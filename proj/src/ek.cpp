#include "cyclo/ek.hpp"

#include <cmath>
#include <string>

#include "cyclo/compensated_sum.hpp"
#include "cyclo/error.hpp"
#include "cyclo/fold.hpp"
#include "cyclo/specfun.hpp"

namespace cyclo::ek {

EkResult ek_difference(const arith::PrimeContext& ctx, transform::Sign loggamma_sign)
{
    using transform::FoldKind;
    const transform::FftPlan plan(ctx.m());
    const auto numerators = transform::odd_character_sums(ctx, FoldKind::loggamma, loggamma_sign, plan);
    const auto denominators = transform::odd_character_sums(ctx, FoldKind::identity, transform::Sign::minus, plan);

    // Each odd character contributes L'/L(1, chi) = gamma + log 2 pi + N_t / D_t.
    const double per_character = specfun::kConstants.euler_gamma + specfun::kConstants.log_2pi;
    CompensatedSum<double> real_part;
    CompensatedSum<double> imag_part;
    for (std::size_t t = 0; t < numerators.size(); ++t) {
        const auto ratio = numerators[t] / denominators[t];
        real_part += ratio.real() + per_character;
        imag_part += ratio.imag();
    }
    EkResult result;
    result.q = ctx.q();
    result.diff = real_part.value();
    result.normalized = result.diff / std::log(static_cast<double>(ctx.q()));
    result.residual_imag = imag_part.value();
    return result;
}

EkResult ek_difference(std::uint64_t q, std::uint64_t max_table_entries, transform::Sign loggamma_sign)
{
    const auto ctx = arith::build_context(q, max_table_entries);
    const auto result = ek_difference(ctx, loggamma_sign);
    if (!(std::abs(result.residual_imag) <= kResidualLimit * (1.0 + std::abs(result.diff)))) {
        throw InternalError("Euler-Kronecker sum for q = " + std::to_string(q) + " is not real: imaginary part " +
                            std::to_string(result.residual_imag));
    }
    return result;
}

}  // namespace cyclo::ek
