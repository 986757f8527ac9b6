#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string_view>

#include "cyclo/arith.hpp"

namespace cyclo::kummer {

enum class Method { oracle, digamma, bernoulli };

std::string_view to_string(Method method);

/// Throws PreconditionError for anything but "oracle", "digamma" or "bernoulli".
Method parse_method(std::string_view name);

/// log r(q), where r(q) = h_1(q) / G(q) is the Kummer ratio of Q(zeta_q).
/// h_1(q) itself is never formed.
struct KummerResult {
    std::uint64_t q = 0;
    double log_r = 0.0;
    double r = 0.0;
    Method method = Method::bernoulli;
    // Sum of principal arguments of the odd-character sums plus pi (q-1)/2,
    // reduced into (-pi, pi]. Zero up to rounding for a correct computation.
    double arg_defect = 0.0;
    std::uint64_t elapsed_ns = 0;
};

struct EngineOptions {
    std::uint64_t oracle_cap = 10'000;
    std::uint64_t max_table_entries = arith::kDefaultMaxTableEntries;
};

inline constexpr double kArgDefectLimit = 1e-6;

/// Quadratic-time reference: every odd character is enumerated explicitly and
/// L(1, chi) = -(1/q) sum_a chi(a) psi(a/q) is summed directly.
KummerResult log_r_oracle(std::uint64_t q, const EngineOptions& options = {});

/// log r = -m log q + sum_t log|S_t|, S_t = sum_a chi(a) psi(a/q) from the cotangent fold.
KummerResult log_r_digamma(std::uint64_t q, const EngineOptions& options = {});

/// log r = m (log pi - 3/2 log q) + sum_t log|sum_a a chi(a)| from the identity fold.
KummerResult log_r_bernoulli(std::uint64_t q, const EngineOptions& options = {});

/// Dispatches to one engine and rejects results whose argument certificate
/// exceeds kArgDefectLimit.
KummerResult kummer_ratio(std::uint64_t q, Method method, const EngineOptions& options = {});

/// log10 G(q), G(q) = 2q (q / 4 pi^2)^((q-1)/4), evaluated in log space.
double log10_G(std::uint64_t q);

/// sum of atan2 over the sums plus pi (q-1)/2, reduced modulo 2 pi into [-pi, pi].
double argument_defect(std::span<const std::complex<double>> sums, std::uint64_t q);

/// Brute-force product over odd chi of sum_a a chi(a), returned as a unit
/// phase and a natural-log magnitude (the product itself overflows quickly).
/// O(q^2); intended for checking the sign (-1)^((q-1)/2) of the product.
struct PolarProduct {
    std::complex<double> phase;
    double log_magnitude = 0.0;
};
PolarProduct oracle_bernoulli_product(std::uint64_t q);

}  // namespace cyclo::kummer
