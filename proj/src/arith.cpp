#include "cyclo/arith.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "cyclo/error.hpp"

namespace cyclo::arith {

namespace {

// Trial division stops here; Pollard rho takes the cofactor.
constexpr std::uint64_t kTrialLimit = 1024;

using u128 = unsigned __int128;

// Montgomery arithmetic modulo an odd n, R = 2^64.
class Montgomery {
public:
    explicit Montgomery(std::uint64_t n) : n_(n), inv_(n)
    {
        for (int i = 0; i < 5; ++i) {
            inv_ *= 2 - n * inv_;
        }
        one_ = (0 - n) % n;
        r2_ = static_cast<std::uint64_t>(static_cast<u128>(one_) * one_ % n);
    }

    std::uint64_t modulus() const { return n_; }
    std::uint64_t one() const { return one_; }
    std::uint64_t to(std::uint64_t a) const { return mul(a % n_, r2_); }

    // (t - (t * n^-1 mod R) n) / R, for t < n R.
    std::uint64_t reduce(u128 t) const
    {
        const std::uint64_t q = static_cast<std::uint64_t>(t) * inv_;
        const auto h = static_cast<std::uint64_t>((static_cast<u128>(q) * n_) >> 64);
        const auto hi = static_cast<std::uint64_t>(t >> 64);
        return hi >= h ? hi - h : hi - h + n_;
    }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return reduce(static_cast<u128>(a) * b); }

    std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const
    {
        std::uint64_t result = one_;
        while (exp != 0) {
            if (exp & 1) {
                result = mul(result, base);
            }
            base = mul(base, base);
            exp >>= 1;
        }
        return result;
    }

private:
    std::uint64_t n_;
    std::uint64_t inv_;
    std::uint64_t one_;
    std::uint64_t r2_;
};

bool miller_rabin_witness(const Montgomery& mont, std::uint64_t d, unsigned s, std::uint64_t a)
{
    const std::uint64_t n = mont.modulus();
    if (a % n == 0) {
        return false;
    }
    const std::uint64_t minus_one = n - mont.one();
    std::uint64_t x = mont.pow(mont.to(a), d);
    if (x == mont.one() || x == minus_one) {
        return false;
    }
    for (unsigned r = 1; r < s; ++r) {
        x = mont.mul(x, x);
        if (x == minus_one) {
            return false;
        }
    }
    return true;
}

// Brent's variant of Pollard rho on an odd composite n, iterating in Montgomery form.
std::uint64_t pollard_brent(std::uint64_t n)
{
    const Montgomery mont(n);
    auto diff = [](std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; };
    for (std::uint64_t c = 1;; ++c) {
        auto f = [&](std::uint64_t x) {
            const std::uint64_t y = mont.mul(x, x) + c;
            return y >= n || y < c ? y - n : y;
        };
        std::uint64_t y = mont.to(2), x = y, ys = y, q = mont.one(), g = 1;
        constexpr std::uint64_t kBatch = 128;
        for (std::uint64_t r = 1; g == 1; r <<= 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) {
                y = f(y);
            }
            for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
                    y = f(y);
                    q = mont.mul(q, diff(x, y));
                }
                g = std::gcd(q, n);
            }
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(diff(x, ys), n);
            } while (g == 1);
        }
        if (g != n) {
            return g;
        }
    }
}

void split(std::uint64_t n, std::vector<std::uint64_t>& out)
{
    if (n == 1) {
        return;
    }
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    const std::uint64_t d = pollard_brent(n);
    split(d, out);
    split(n / d, out);
}

}  // namespace

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n)
{
    std::uint64_t result = 1 % n;
    base %= n;
    while (exp != 0) {
        if (exp & 1) {
            result = mul_mod(result, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) {
            return n == p;
        }
    }
    if (n < 41 * 41) {
        return true;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Jim Sinclair's base set: deterministic below 2^64.
    static constexpr std::array<std::uint64_t, 7> kBases{2, 325, 9375, 28178, 450775, 9780504, 1795265022};
    const Montgomery mont(n);
    return std::none_of(kBases.begin(), kBases.end(),
                        [&](std::uint64_t a) { return miller_rabin_witness(mont, d, s, a); });
}

std::vector<std::uint64_t> factorize(std::uint64_t n)
{
    if (n < 2) {
        throw PreconditionError("factorize: n must be >= 2, got " + std::to_string(n));
    }
    std::vector<std::uint64_t> factors;
    while ((n & 1) == 0) {
        factors.push_back(2);
        n >>= 1;
    }
    for (std::uint64_t p = 3; p < kTrialLimit && p * p <= n; p += 2) {
        while (n % p == 0) {
            factors.push_back(p);
            n /= p;
        }
    }
    split(n, factors);
    std::sort(factors.begin(), factors.end());
    return factors;
}

void require_odd_prime(std::uint64_t q)
{
    if (q < 3 || !is_prime(q)) {
        throw PreconditionError("q must be an odd prime, got " + std::to_string(q));
    }
}

std::uint64_t find_primitive_root(std::uint64_t q)
{
    require_odd_prime(q);
    auto primes = factorize(q - 1);
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (std::uint64_t g = 2; g < q; ++g) {
        const bool generates = std::all_of(primes.begin(), primes.end(),
                                           [&](std::uint64_t p) { return pow_mod(g, (q - 1) / p, q) != 1; });
        if (generates) {
            return g;
        }
    }
    throw InternalError("no primitive root found for " + std::to_string(q));
}

PrimeContext::PrimeContext(std::uint64_t q, std::uint64_t g, std::vector<std::uint64_t> powers)
    : q_(q), g_(g), m_((q - 1) / 2), powers_(std::move(powers))
{
}

PrimeContext build_context(std::uint64_t q, std::uint64_t max_entries)
{
    require_odd_prime(q);
    if (q - 1 > max_entries) {
        throw PreconditionError("q = " + std::to_string(q) + " needs " + std::to_string(q - 1) +
                                " power-table entries, above the memory budget of " +
                                std::to_string(max_entries));
    }
    const std::uint64_t g = find_primitive_root(q);
    std::vector<std::uint64_t> powers(q - 1);
    std::uint64_t a = 1;
    for (auto& entry : powers) {
        entry = a;
        a = mul_mod(a, g, q);
    }
    return PrimeContext(q, g, std::move(powers));
}

}  // namespace cyclo::arith
