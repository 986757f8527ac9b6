#pragma once

#include <cmath>

namespace cyclo {

/// Neumaier's variant of Kahan summation. The result depends only on the
/// order of add() calls, so a fixed order gives bit-identical totals.
template <typename Real>
class CompensatedSum {
public:
    void add(Real x) noexcept
    {
        const Real t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            compensation_ += (sum_ - t) + x;
        } else {
            compensation_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    CompensatedSum& operator+=(Real x) noexcept
    {
        add(x);
        return *this;
    }

    Real value() const noexcept { return sum_ + compensation_; }

private:
    Real sum_{};
    Real compensation_{};
};

}  // namespace cyclo
