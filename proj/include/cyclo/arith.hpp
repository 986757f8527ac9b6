#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cyclo::arith {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n);

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Prime factors of n with multiplicity, ascending. Throws PreconditionError for n < 2.
std::vector<std::uint64_t> factorize(std::uint64_t n);

/// Smallest g >= 2 generating (Z/qZ)^*. q must be an odd prime.
std::uint64_t find_primitive_root(std::uint64_t q);

/// Default cap on the number of power-table entries (q - 1) a context may hold.
inline constexpr std::uint64_t kDefaultMaxTableEntries = std::uint64_t{1} << 31;

/// Rader reindexing state for an odd prime q: primitive root g, half
/// length m = (q-1)/2 and the table a_k = g^k mod q for k = 0..q-2.
///
/// Immutable once built; share freely between threads.
class PrimeContext {
public:
    std::uint64_t q() const noexcept { return q_; }
    std::uint64_t g() const noexcept { return g_; }
    std::uint64_t m() const noexcept { return m_; }
    std::span<const std::uint64_t> powers() const noexcept { return powers_; }
    std::uint64_t power(std::size_t k) const noexcept { return powers_[k]; }

private:
    friend PrimeContext build_context(std::uint64_t q, std::uint64_t max_entries);
    PrimeContext(std::uint64_t q, std::uint64_t g, std::vector<std::uint64_t> powers);

    std::uint64_t q_;
    std::uint64_t g_;
    std::uint64_t m_;
    std::vector<std::uint64_t> powers_;
};

/// Throws PreconditionError if q is not an odd prime or q - 1 exceeds max_entries.
PrimeContext build_context(std::uint64_t q, std::uint64_t max_entries = kDefaultMaxTableEntries);

/// Throws PreconditionError unless q is an odd prime.
void require_odd_prime(std::uint64_t q);

}  // namespace cyclo::arith
