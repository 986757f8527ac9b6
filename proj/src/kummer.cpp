#include "cyclo/kummer.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "cyclo/compensated_sum.hpp"
#include "cyclo/error.hpp"
#include "cyclo/fold.hpp"
#include "cyclo/specfun.hpp"

namespace cyclo::kummer {

namespace {

using transform::Complex;
using transform::ComplexSequence;
using Clock = std::chrono::steady_clock;

void check_oracle_cap(std::uint64_t q, const EngineOptions& options)
{
    if (q > options.oracle_cap) {
        throw PreconditionError("q = " + std::to_string(q) + " exceeds the oracle cap " +
                                std::to_string(options.oracle_cap));
    }
}

// S_t = sum_{k=0}^{q-2} e((2t+1) k / (q-1)) f_k for every t < m, one character at a time.
ComplexSequence explicit_odd_sums(const arith::PrimeContext& ctx, std::span<const double> f)
{
    const std::uint64_t n = ctx.q() - 1;
    ComplexSequence roots(n);
    for (std::uint64_t r = 0; r < n; ++r) {
        roots[r] = transform::unit_root(r, n, transform::Sign::plus);
    }
    ComplexSequence sums(ctx.m());
    for (std::uint64_t t = 0; t < ctx.m(); ++t) {
        const std::uint64_t j = 2 * t + 1;
        double re = 0.0, im = 0.0;
        std::uint64_t idx = 0;
        for (std::uint64_t k = 0; k < n; ++k) {
            re += roots[idx].real() * f[k];
            im += roots[idx].imag() * f[k];
            idx += j;
            if (idx >= n) {
                idx -= n;
            }
        }
        sums[t] = {re, im};
    }
    return sums;
}

// sum_t (log|S_t| + shift), compensated, in index order.
double sum_log_abs(std::span<const Complex> sums, double shift)
{
    CompensatedSum<double> total;
    for (const auto& s : sums) {
        // |S| is O(1) to O(q), so squaring cannot overflow or underflow.
        total += 0.5 * std::log(std::norm(s)) + shift;
    }
    return total.value();
}

KummerResult finish(std::uint64_t q, Method method, double log_r, std::span<const Complex> sums,
                    Clock::time_point start)
{
    KummerResult result;
    result.q = q;
    result.method = method;
    result.log_r = log_r;
    result.r = std::exp(log_r);
    result.arg_defect = argument_defect(sums, q);
    result.elapsed_ns =
        static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count());
    return result;
}

}  // namespace

std::string_view to_string(Method method)
{
    switch (method) {
    case Method::oracle:
        return "oracle";
    case Method::digamma:
        return "digamma";
    case Method::bernoulli:
        return "bernoulli";
    }
    return "unknown";
}

Method parse_method(std::string_view name)
{
    for (auto method : {Method::oracle, Method::digamma, Method::bernoulli}) {
        if (name == to_string(method)) {
            return method;
        }
    }
    throw PreconditionError("unknown method '" + std::string(name) + "' (expected oracle, digamma or bernoulli)");
}

double argument_defect(std::span<const Complex> sums, std::uint64_t q)
{
    constexpr long double kPi = std::numbers::pi_v<long double>;
    CompensatedSum<long double> total;
    for (const auto& s : sums) {
        total += static_cast<long double>(std::atan2(s.imag(), s.real()));
    }
    // m pi modulo 2 pi depends only on the parity of m = (q-1)/2.
    const auto half_turns = static_cast<long double>(((q - 1) / 2) % 2);
    const long double defect = std::remainder(total.value() + half_turns * kPi, 2 * kPi);
    return static_cast<double>(defect);
}

KummerResult log_r_oracle(std::uint64_t q, const EngineOptions& options)
{
    const auto start = Clock::now();
    arith::require_odd_prime(q);
    check_oracle_cap(q, options);
    const auto ctx = arith::build_context(q, options.max_table_entries);
    std::vector<double> psi(q - 1);
    for (std::size_t k = 0; k < psi.size(); ++k) {
        psi[k] = specfun::digamma(static_cast<double>(ctx.power(k)) / static_cast<double>(q));
    }
    const auto sums = explicit_odd_sums(ctx, psi);
    // L(1, chi) = -S / q
    const double log_r = sum_log_abs(sums, -std::log(static_cast<double>(q)));
    return finish(q, Method::oracle, log_r, sums, start);
}

KummerResult log_r_digamma(std::uint64_t q, const EngineOptions& options)
{
    const auto start = Clock::now();
    const auto ctx = arith::build_context(q, options.max_table_entries);
    const auto sums = transform::odd_character_sums(ctx, transform::FoldKind::cotangent, transform::Sign::plus);
    const double log_r = sum_log_abs(sums, -std::log(static_cast<double>(q)));
    return finish(q, Method::digamma, log_r, sums, start);
}

KummerResult log_r_bernoulli(std::uint64_t q, const EngineOptions& options)
{
    const auto start = Clock::now();
    const auto ctx = arith::build_context(q, options.max_table_entries);
    // S_t = B_{1,chi}; log|q S_t| = log q + log|S_t|, and each term also carries
    // its share log pi - 3/2 log q of the prefactor.
    const auto sums = transform::odd_character_sums(ctx, transform::FoldKind::identity, transform::Sign::plus);
    const double log_q = std::log(static_cast<double>(q));
    const double log_r = sum_log_abs(sums, std::log(std::numbers::pi) - 0.5 * log_q);
    return finish(q, Method::bernoulli, log_r, sums, start);
}

KummerResult kummer_ratio(std::uint64_t q, Method method, const EngineOptions& options)
{
    KummerResult result;
    switch (method) {
    case Method::oracle:
        result = log_r_oracle(q, options);
        break;
    case Method::digamma:
        result = log_r_digamma(q, options);
        break;
    case Method::bernoulli:
        result = log_r_bernoulli(q, options);
        break;
    }
    if (!(std::abs(result.arg_defect) <= kArgDefectLimit)) {
        throw InternalError("argument certificate failed for q = " + std::to_string(q) +
                            ": defect " + std::to_string(result.arg_defect));
    }
    return result;
}

double log10_G(std::uint64_t q)
{
    arith::require_odd_prime(q);
    const double qd = static_cast<double>(q);
    const double four_pi_sq = 4.0 * std::numbers::pi * std::numbers::pi;
    return std::log10(2.0 * qd) + (qd - 1.0) / 4.0 * std::log10(qd / four_pi_sq);
}

PolarProduct oracle_bernoulli_product(std::uint64_t q)
{
    arith::require_odd_prime(q);
    const auto ctx = arith::build_context(q);
    std::vector<double> a(q - 1);
    for (std::size_t k = 0; k < a.size(); ++k) {
        a[k] = static_cast<double>(ctx.power(k));
    }
    PolarProduct product{{1.0, 0.0}, 0.0};
    CompensatedSum<double> log_magnitude;
    for (const auto& s : explicit_odd_sums(ctx, a)) {
        const double magnitude = std::abs(s);
        product.phase *= s / magnitude;
        log_magnitude += std::log(magnitude);
    }
    product.log_magnitude = log_magnitude.value();
    return product;
}

}  // namespace cyclo::kummer
