#include <algorithm>
#include <limits>

#include "cyclo/arith.hpp"
#include "cyclo/error.hpp"
#include "cyclo/scan.hpp"
#include "cyclo/sieve.hpp"

namespace cyclo::scan {

unsigned count_prime_multiples(std::uint64_t q, unsigned b_limit)
{
    if (b_limit != 0 && q > (std::numeric_limits<std::uint64_t>::max() - 1) / b_limit) {
        throw PreconditionError("b q + 1 overflows 64 bits for q = " + std::to_string(q));
    }
    unsigned hits = 0;
    for (unsigned b = 1; b <= b_limit; ++b) {
        if (arith::is_prime(b * q + 1)) {
            ++hits;
        }
    }
    return hits;
}

std::vector<Candidate> rank_candidates(std::uint64_t from, std::uint64_t to, unsigned b_limit, std::size_t count)
{
    std::vector<Candidate> ranked;
    if (from > to) {
        return ranked;
    }
    for (std::uint64_t q : odd_primes_in(from, to)) {
        ranked.push_back({q, count_prime_multiples(q, b_limit)});
    }
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const Candidate& a, const Candidate& b) { return a.hits > b.hits; });
    if (ranked.size() > count) {
        ranked.resize(count);
    }
    return ranked;
}

}  // namespace cyclo::scan
