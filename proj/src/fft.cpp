#include "cyclo/fft.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "cyclo/arith.hpp"
#include "cyclo/error.hpp"

namespace cyclo::transform {

namespace {

void check_length(std::size_t n, const char* what)
{
    if (n == 0) {
        throw PreconditionError(std::string(what) + ": length must be at least 1");
    }
}

// Chirp-z transform of one prime length p, sign minus:
//   X[k] = c_k sum_j (x_j c_j) conj(c_{k-j}),  c_j = exp(-pi i j^2 / p).
class Bluestein {
public:
    explicit Bluestein(std::size_t p)
        : p_(p), conv_len_(std::bit_ceil(2 * p - 1)), inner_(conv_len_), chirp_(p), kernel_(conv_len_)
    {
        const auto two_p = static_cast<std::uint64_t>(2 * p);
        for (std::size_t j = 0; j < p; ++j) {
            const auto j2 = static_cast<std::uint64_t>(static_cast<unsigned __int128>(j) * j % two_p);
            chirp_[j] = unit_root(j2, two_p, Sign::minus);
        }
        ComplexSequence b(conv_len_, Complex{});
        b[0] = std::conj(chirp_[0]);
        for (std::size_t l = 1; l < p; ++l) {
            b[l] = b[conv_len_ - l] = std::conj(chirp_[l]);
        }
        inner_.execute(b, kernel_, Sign::minus);
        const double scale = 1.0 / static_cast<double>(conv_len_);
        for (auto& v : kernel_) {
            v *= scale;
        }
    }

    void apply(std::span<Complex> data) const
    {
        // Buffers are reused across calls; plans may run on several threads.
        thread_local ComplexSequence a;
        thread_local ComplexSequence spectrum;
        a.assign(conv_len_, Complex{});
        spectrum.resize(conv_len_);
        for (std::size_t j = 0; j < p_; ++j) {
            a[j] = data[j] * chirp_[j];
        }
        inner_.execute(a, spectrum, Sign::minus);
        // Inverse transform as conj(forward(conj(.))), folding both conjugations into the loops.
        for (std::size_t i = 0; i < conv_len_; ++i) {
            spectrum[i] = std::conj(spectrum[i] * kernel_[i]);
        }
        inner_.execute(spectrum, a, Sign::minus);
        for (std::size_t k = 0; k < p_; ++k) {
            data[k] = std::conj(a[k]) * chirp_[k];
        }
    }

private:
    std::size_t p_;
    std::size_t conv_len_;
    FftPlan inner_;
    ComplexSequence chirp_;
    ComplexSequence kernel_;  // FFT of the conjugate chirp, scaled by 1 / conv_len_
};

std::vector<std::size_t> choose_radices(std::size_t n)
{
    std::vector<std::size_t> radices;
    if (n == 1) {
        return radices;
    }
    const auto primes = arith::factorize(n);
    const auto twos = static_cast<std::size_t>(std::count(primes.begin(), primes.end(), 2u));
    for (std::size_t i = 0; i < twos / 2; ++i) {
        radices.push_back(4);
    }
    if (twos % 2 == 1) {
        radices.push_back(2);
    }
    for (auto p : primes) {
        if (p != 2) {
            radices.push_back(static_cast<std::size_t>(p));
        }
    }
    return radices;
}

}  // namespace

struct FftPlan::Stage {
    std::size_t radix = 0;
    std::size_t length = 0;                // transform length at this level
    ComplexSequence twiddles;              // (radix - 1) rows of length / radix, sign minus
    ComplexSequence roots;                 // exp(-2 pi i r / radix) for the direct kernel
    std::shared_ptr<const Bluestein> chirp;

    void butterfly(std::span<Complex> v, std::span<Complex> scratch) const
    {
        switch (radix) {
        case 2: {
            const Complex a = v[0], b = v[1];
            v[0] = a + b;
            v[1] = a - b;
            return;
        }
        case 4: {
            const Complex s02 = v[0] + v[2], d02 = v[0] - v[2];
            const Complex s13 = v[1] + v[3], d13 = v[1] - v[3];
            const Complex rot{d13.imag(), -d13.real()};  // -i * d13
            v[0] = s02 + s13;
            v[1] = d02 + rot;
            v[2] = s02 - s13;
            v[3] = d02 - rot;
            return;
        }
        default:
            break;
        }
        if (chirp) {
            chirp->apply(v);
            return;
        }
        for (std::size_t u = 0; u < radix; ++u) {
            Complex acc = v[0];
            std::size_t idx = 0;
            for (std::size_t s = 1; s < radix; ++s) {
                idx += u;
                if (idx >= radix) {
                    idx -= radix;
                }
                acc += v[s] * roots[idx];
            }
            scratch[u] = acc;
        }
        std::copy_n(scratch.begin(), radix, v.begin());
    }
};

Complex unit_root(std::uint64_t r, std::uint64_t n, Sign sign)
{
    r %= n;
    if (r == 0) {
        return {1.0, 0.0};
    }
    // Reduce to |angle| <= pi so sin/cos see the smallest possible argument.
    const bool upper = 2 * static_cast<unsigned __int128>(r) > n;
    const double frac = static_cast<double>(upper ? n - r : r) / static_cast<double>(n);
    const double angle = 2.0 * std::numbers::pi * frac;
    double im = std::sin(angle);
    if (upper) {
        im = -im;
    }
    if (sign == Sign::minus) {
        im = -im;
    }
    return {std::cos(angle), im};
}

ComplexSequence dft_naive(std::span<const Complex> input, Sign sign)
{
    const std::size_t n = input.size();
    check_length(n, "dft_naive");
    ComplexSequence roots(n);
    for (std::size_t r = 0; r < n; ++r) {
        roots[r] = unit_root(r, n, sign);
    }
    ComplexSequence output(n);
    for (std::size_t t = 0; t < n; ++t) {
        Complex acc{};
        std::size_t idx = 0;
        for (std::size_t k = 0; k < n; ++k) {
            acc += input[k] * roots[idx];
            idx += t;
            if (idx >= n) {
                idx -= n;
            }
        }
        output[t] = acc;
    }
    return output;
}

FftPlan::FftPlan(std::size_t n) : n_(n)
{
    check_length(n, "FftPlan");
    std::size_t length = n;
    for (std::size_t radix : choose_radices(n)) {
        Stage stage;
        stage.radix = radix;
        stage.length = length;
        const std::size_t sub = length / radix;
        if (sub > 1) {
            stage.twiddles.resize((radix - 1) * sub);
            for (std::size_t s = 1; s < radix; ++s) {
                for (std::size_t k = 0; k < sub; ++k) {
                    stage.twiddles[(s - 1) * sub + k] = unit_root(s * k, length, Sign::minus);
                }
            }
        }
        if (radix > kMaxDirectRadix) {
            stage.chirp = std::make_shared<const Bluestein>(radix);
        } else if (radix != 2 && radix != 4) {
            stage.roots.resize(radix);
            for (std::size_t r = 0; r < radix; ++r) {
                stage.roots[r] = unit_root(r, radix, Sign::minus);
            }
        }
        max_radix_ = std::max(max_radix_, radix);
        stages_.push_back(std::move(stage));
        length = sub;
    }
}

FftPlan::~FftPlan() = default;
FftPlan::FftPlan(FftPlan&&) noexcept = default;
FftPlan& FftPlan::operator=(FftPlan&&) noexcept = default;

// Decimation in time: out[0 .. length) <- DFT of in[0], in[stride], ...
// work holds 2 * max radix elements.
void FftPlan::run(std::size_t level, const Complex* in, std::size_t stride, Complex* out, Complex* work) const
{
    if (level == stages_.size()) {
        out[0] = in[0];
        return;
    }
    const Stage& stage = stages_[level];
    const std::size_t p = stage.radix;
    const std::size_t sub = stage.length / p;
    const std::span<Complex> v(work, p);
    const std::span<Complex> scratch(work + p, p);
    if (sub == 1) {
        for (std::size_t s = 0; s < p; ++s) {
            v[s] = in[s * stride];
        }
        stage.butterfly(v, scratch);
        std::copy_n(v.begin(), p, out);
        return;
    }
    for (std::size_t s = 0; s < p; ++s) {
        run(level + 1, in + s * stride, stride * p, out + s * sub, work);
    }
    const Complex* tw = stage.twiddles.data();
    if (p == 4) {
        Complex* o0 = out;
        Complex* o1 = out + sub;
        Complex* o2 = out + 2 * sub;
        Complex* o3 = out + 3 * sub;
        for (std::size_t k = 0; k < sub; ++k) {
            const Complex a0 = o0[k];
            const Complex a1 = o1[k] * tw[k];
            const Complex a2 = o2[k] * tw[sub + k];
            const Complex a3 = o3[k] * tw[2 * sub + k];
            const Complex s02 = a0 + a2, d02 = a0 - a2;
            const Complex s13 = a1 + a3, d13 = a1 - a3;
            const Complex rot{d13.imag(), -d13.real()};
            o0[k] = s02 + s13;
            o1[k] = d02 + rot;
            o2[k] = s02 - s13;
            o3[k] = d02 - rot;
        }
        return;
    }
    if (p == 2) {
        for (std::size_t k = 0; k < sub; ++k) {
            const Complex a0 = out[k];
            const Complex a1 = out[sub + k] * tw[k];
            out[k] = a0 + a1;
            out[sub + k] = a0 - a1;
        }
        return;
    }
    for (std::size_t k = 0; k < sub; ++k) {
        v[0] = out[k];
        for (std::size_t s = 1; s < p; ++s) {
            v[s] = out[s * sub + k] * stage.twiddles[(s - 1) * sub + k];
        }
        stage.butterfly(v, scratch);
        for (std::size_t u = 0; u < p; ++u) {
            out[u * sub + k] = v[u];
        }
    }
}

void FftPlan::execute(std::span<const Complex> in, std::span<Complex> out, Sign sign) const
{
    if (in.size() != n_ || out.size() != n_) {
        throw PreconditionError("FftPlan::execute: expected length " + std::to_string(n_));
    }
    ComplexSequence work(2 * max_radix_);
    if (sign == Sign::minus) {
        run(0, in.data(), 1, out.data(), work.data());
        return;
    }
    // exp(+...) transform = conj of the exp(-...) transform of the conjugate input.
    ComplexSequence conjugated(in.size());
    std::transform(in.begin(), in.end(), conjugated.begin(), [](Complex z) { return std::conj(z); });
    run(0, conjugated.data(), 1, out.data(), work.data());
    for (auto& z : out) {
        z = std::conj(z);
    }
}

ComplexSequence FftPlan::operator()(std::span<const Complex> in, Sign sign) const
{
    ComplexSequence out(n_);
    execute(in, out, sign);
    return out;
}

ComplexSequence dft_fast(std::span<const Complex> input, Sign sign)
{
    check_length(input.size(), "dft_fast");
    return FftPlan(input.size())(input, sign);
}

}  // namespace cyclo::transform
