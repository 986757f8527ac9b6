#pragma once

#include <span>

#include "cyclo/arith.hpp"
#include "cyclo/fft.hpp"

namespace cyclo::transform {

/// The function f whose character sums sum_a chi(a) f(a/q) are wanted,
/// represented through its odd part f(x) - f(1 - x):
///   identity  : f(x) = x,          odd part 2x - 1
///   cotangent : f(x) = psi(x),     odd part -pi cot(pi x)
///   loggamma  : f(x) = logGamma(x), odd part 2 logGamma(x) + log sin(pi x) - log pi
enum class FoldKind { identity, cotangent, loggamma };

/// Half-length sequences of the decimation-in-frequency split of a length q-1
/// transform: DFT(even)[t] is the full transform at frequency 2t, DFT(odd)[t]
/// at frequency 2t+1.
struct DifFold {
    ComplexSequence even;  // b_k = f_k + f_{k+m}
    ComplexSequence odd;   // c_k = e(sign k / (q-1)) (f_k - f_{k+m})
};

/// f_values[k] holds f(a_k / q) for k = 0..q-2.
DifFold dif_fold(std::span<const double> f_values, const arith::PrimeContext& ctx, Sign sign);

/// f(a/q) - f(1 - a/q) for 1 <= a <= q-1, evaluated on min(a, q-a) so the
/// argument is never rounded near 1.
double odd_part(FoldKind kind, std::uint64_t a, std::uint64_t q);

/// The odd fold c_k for k = 0..m-1 built from the closed-form odd part.
ComplexSequence odd_fold(const arith::PrimeContext& ctx, FoldKind kind, Sign sign);

/// S[t] = sum_{a=1}^{q-1} chi^{2t+1}(a) f(a/q), t = 0..m-1, where chi(g) = e(1/(q-1))
/// (its conjugate when sign is minus). For the identity fold S[t] = B_{1,chi^{2t+1}}.
///
/// Throws InternalError if some |S[t]| falls below kVanishingRatio times the
/// largest magnitude; L(1, chi) never vanishes, so that only happens on a bug.
ComplexSequence odd_character_sums(const arith::PrimeContext& ctx, FoldKind kind, Sign sign);
ComplexSequence odd_character_sums(const arith::PrimeContext& ctx, FoldKind kind, Sign sign, const FftPlan& plan);

inline constexpr double kVanishingRatio = 1e-12;

}  // namespace cyclo::transform
