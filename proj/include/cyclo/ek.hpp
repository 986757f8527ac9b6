#pragma once

#include <cstdint>

#include "cyclo/arith.hpp"
#include "cyclo/fft.hpp"

namespace cyclo::ek {

/// Difference of the Euler-Kronecker constants of Q(zeta_q) and of its
/// maximal real subfield, i.e. the sum of L'/L(1, chi) over odd chi.
struct EkResult {
    std::uint64_t q = 0;
    double diff = 0.0;
    double normalized = 0.0;     // diff / log q
    double residual_imag = 0.0;  // imaginary part of the character-sum total
};

/// |residual_imag| above this times (1 + |diff|) is reported as an InternalError.
inline constexpr double kResidualLimit = 1e-6;

/// diff = m (gamma + log 2 pi) + Re sum_t N_t / D_t with
///   N_t = sum_a conj(chi)(a) logGamma(a/q)   (loggamma fold)
///   D_t = B_{1, conj(chi)}                    (identity fold)
/// for chi = chi_1^(2t+1). The conjugate character is summed, so both folds use
/// the twiddle exp(-2 pi i k / (q-1)); `sign` exists only to let tests flip it.
EkResult ek_difference(std::uint64_t q, std::uint64_t max_table_entries = arith::kDefaultMaxTableEntries,
                       transform::Sign sign = transform::Sign::minus);

/// Same computation on an existing context; no residual check.
EkResult ek_difference(const arith::PrimeContext& ctx, transform::Sign sign);

}  // namespace cyclo::ek
