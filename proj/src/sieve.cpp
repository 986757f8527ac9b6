#include "cyclo/sieve.hpp"

#include <algorithm>
#include <cmath>

namespace cyclo::scan {

namespace {

constexpr std::uint64_t kSegmentOdds = std::uint64_t{1} << 18;

std::uint64_t isqrt(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) {
        --r;
    }
    while ((r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

std::vector<std::uint64_t> small_odd_primes(std::uint64_t limit)
{
    std::vector<char> composite(limit + 1, 0);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 3; i <= limit; i += 2) {
        if (composite[i]) {
            continue;
        }
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += 2 * i) {
            composite[j] = 1;
        }
    }
    return primes;
}

}  // namespace

std::vector<std::uint64_t> odd_primes_in(std::uint64_t start, std::uint64_t end)
{
    std::vector<std::uint64_t> out;
    start = std::max<std::uint64_t>(start, 3);
    if (start > end) {
        return out;
    }
    if (start % 2 == 0) {
        ++start;
    }
    if (start > end) {
        return out;
    }
    const auto base = small_odd_primes(isqrt(end));
    // Odd numbers start, start+2, ... in windows of kSegmentOdds.
    std::vector<char> composite;
    for (std::uint64_t low = start; low <= end;) {
        const std::uint64_t count = std::min(kSegmentOdds, (end - low) / 2 + 1);
        const std::uint64_t high = low + 2 * (count - 1);
        composite.assign(count, 0);
        for (std::uint64_t p : base) {
            if (p * p > high) {
                break;
            }
            // First odd multiple of p that is >= max(low, p*p).
            std::uint64_t first = std::max(p * p, (low + p - 1) / p * p);
            if (first % 2 == 0) {
                first += p;
            }
            for (std::uint64_t x = first; x <= high; x += 2 * p) {
                composite[(x - low) / 2] = 1;
            }
        }
        for (std::uint64_t i = 0; i < count; ++i) {
            if (!composite[i]) {
                out.push_back(low + 2 * i);
            }
        }
        if (high >= end) {
            break;
        }
        low = high + 2;
    }
    return out;
}

}  // namespace cyclo::scan
