#pragma once

#include <cstdint>
#include <vector>

namespace cyclo::scan {

/// Odd primes p with start <= p <= end, ascending, via a segmented sieve of Eratosthenes.
std::vector<std::uint64_t> odd_primes_in(std::uint64_t start, std::uint64_t end);

}  // namespace cyclo::scan
