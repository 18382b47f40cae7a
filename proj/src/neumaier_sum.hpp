#pragma once

#include <cmath>

namespace magsteklov::detail {

// Kahan-Babuska (Neumaier) compensated accumulator.
template <typename Real>
class NeumaierSum {
public:
    void add(Real x) {
        const Real t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    Real value() const { return sum_ + comp_; }

private:
    Real sum_ = 0;
    Real comp_ = 0;
};

} // namespace magsteklov::detail
