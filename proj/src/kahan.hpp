#pragma once

namespace astopo::detail {

/// Compensated (Kahan) accumulator; error stays O(eps) regardless of count.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double term) {
        const double y = term - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }

    double value() const noexcept { return sum; }
};

}  // namespace astopo::detail
