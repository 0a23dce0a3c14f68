#include "astopo/powerlaw.hpp"

#include <cmath>
#include <string>

#include "astopo/errors.hpp"
#include "kahan.hpp"

namespace astopo {

double truncated_zeta(double s, std::int64_t a, std::int64_t b) {
    if (!std::isfinite(s)) {
        throw DomainError("truncated zeta: exponent must be finite");
    }
    if (a < 1 || b < a) {
        throw DomainError("truncated zeta: requires 1 <= a <= b, got a=" +
                          std::to_string(a) + " b=" + std::to_string(b));
    }
    detail::KahanSum acc;
    if (s > 0.0) {
        // Terms shrink with k; add smallest first.
        for (std::int64_t k = b; k >= a; --k) {
            acc.add(std::pow(static_cast<double>(k), -s));
        }
    } else {
        for (std::int64_t k = a; k <= b; ++k) {
            acc.add(std::pow(static_cast<double>(k), -s));
        }
    }
    return acc.value();
}

BoundedPowerLaw::BoundedPowerLaw(double lambda, int k_min, int k_max)
    : lambda_(lambda), k_min_(k_min), k_max_(k_max) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw DomainError("bounded power law: lambda must be positive, got " +
                          std::to_string(lambda));
    }
    if (k_min < 1 || k_max < k_min) {
        throw DomainError("bounded power law: requires 1 <= k_min <= k_max, got k_min=" +
                          std::to_string(k_min) + " k_max=" + std::to_string(k_max));
    }
    z_norm_ = truncated_zeta(lambda_, k_min_, k_max_);
    if (!std::isfinite(z_norm_) || z_norm_ <= 0.0) {
        throw DomainError("bounded power law: normalization is not a positive finite number");
    }
}

namespace {

void require_in_support(int k, int k_min, int k_max, const char* op) {
    if (k < k_min || k > k_max) {
        throw DomainError(std::string(op) + ": degree " + std::to_string(k) +
                          " outside support [" + std::to_string(k_min) + ", " +
                          std::to_string(k_max) + "]");
    }
}

}  // namespace

double BoundedPowerLaw::pmf(int k) const {
    require_in_support(k, k_min_, k_max_, "pmf");
    return std::pow(static_cast<double>(k), -lambda_) / z_norm_;
}

double BoundedPowerLaw::ccdf(int k) const {
    require_in_support(k, k_min_, k_max_, "ccdf");
    // Same summation order as the normalizer, so ccdf(k_min) is exactly 1.
    return truncated_zeta(lambda_, k, k_max_) / z_norm_;
}

double BoundedPowerLaw::cdf(int k) const {
    require_in_support(k, k_min_, k_max_, "cdf");
    if (k == k_max_) {
        return 1.0;
    }
    return 1.0 - truncated_zeta(lambda_, k + 1, k_max_) / z_norm_;
}

std::vector<double> BoundedPowerLaw::cumulative_table() const {
    // Built by one descending compensated sweep. After adding the term for
    // degree j the accumulator equals truncated_zeta(lambda, j, k_max)
    // bit-for-bit, so every entry matches cdf() exactly.
    std::vector<double> table(static_cast<std::size_t>(support_size()));
    table.back() = 1.0;
    detail::KahanSum acc;
    for (int j = k_max_; j > k_min_; --j) {
        acc.add(std::pow(static_cast<double>(j), -lambda_));
        table[static_cast<std::size_t>(j - 1 - k_min_)] = 1.0 - acc.value() / z_norm_;
    }
    return table;
}

int BoundedPowerLaw::quantile(double u) const {
    if (!(u >= 0.0) || u >= 1.0) {
        throw DomainError("quantile: u must lie in [0, 1), got " + std::to_string(u));
    }
    // Walk the same descending sweep cumulative_table() uses; stop at the
    // first k whose cdf drops below u. cdf decreases as k does, so the
    // previous k is the smallest one with cdf(k) >= u.
    detail::KahanSum acc;
    for (int j = k_max_; j > k_min_; --j) {
        acc.add(std::pow(static_cast<double>(j), -lambda_));
        if (1.0 - acc.value() / z_norm_ < u) {
            return j;
        }
    }
    return k_min_;
}

double BoundedPowerLaw::mean_degree() const {
    return truncated_zeta(lambda_ - 1.0, k_min_, k_max_) / z_norm_;
}

}  // namespace astopo
