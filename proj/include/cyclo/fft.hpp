#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace cyclo::transform {

using Complex = std::complex<double>;
using ComplexSequence = std::vector<Complex>;

/// Sign of the exponent: output[t] = sum_k input[k] exp(sign * 2 pi i t k / n).
enum class Sign : int { minus = -1, plus = 1 };

/// exp(sign * 2 pi i r / n) with r reduced mod n in integer arithmetic.
Complex unit_root(std::uint64_t r, std::uint64_t n, Sign sign);

/// O(n^2) reference transform.
ComplexSequence dft_naive(std::span<const Complex> input, Sign sign);

/// Arbitrary-length DFT plan.
///
/// The length is split into prime factors. Factors 2 and 4 use dedicated
/// butterflies, other primes up to kMaxDirectRadix a direct length-p DFT,
/// and larger primes a chirp-z (Bluestein) convolution over a power-of-two
/// length. Plans are immutable; execute() may run concurrently.
class FftPlan {
public:
    static constexpr std::size_t kMaxDirectRadix = 61;

    explicit FftPlan(std::size_t n);
    ~FftPlan();
    FftPlan(FftPlan&&) noexcept;
    FftPlan& operator=(FftPlan&&) noexcept;

    std::size_t size() const noexcept { return n_; }

    /// in and out must both have size() elements and must not overlap.
    void execute(std::span<const Complex> in, std::span<Complex> out, Sign sign) const;

    ComplexSequence operator()(std::span<const Complex> in, Sign sign) const;

    struct Stage;

private:
    void run(std::size_t level, const Complex* in, std::size_t stride, Complex* out, Complex* work) const;

    std::size_t n_;
    std::size_t max_radix_ = 1;
    std::vector<Stage> stages_;
};

/// One-shot transform through a freshly built FftPlan.
ComplexSequence dft_fast(std::span<const Complex> input, Sign sign);

}  // namespace cyclo::transform
