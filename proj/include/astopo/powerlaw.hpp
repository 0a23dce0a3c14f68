#pragma once

#include <cstdint>
#include <vector>

namespace astopo {

/// Inclusive truncated zeta sum: sum of k^{-s} for k = a..b.
///
/// Terms are accumulated smallest first with compensated summation, so the
/// result matches an arbitrary-precision sum to about 1 part in 10^12 over
/// the whole desk-scale range (b up to 1e5 and beyond).
double truncated_zeta(double s, std::int64_t a, std::int64_t b);

/// Discrete power law p(k) = k^{-lambda} / Z on the bounded support
/// k = k_min, k_min+1, ..., k_max, with Z the inclusive truncated zeta sum.
///
/// Immutable after construction; safe to share across threads.
class BoundedPowerLaw {
public:
    /// Throws DomainError unless lambda > 0 and 1 <= k_min <= k_max.
    BoundedPowerLaw(double lambda, int k_min, int k_max);

    double lambda() const noexcept { return lambda_; }
    int k_min() const noexcept { return k_min_; }
    int k_max() const noexcept { return k_max_; }
    double z_norm() const noexcept { return z_norm_; }
    int support_size() const noexcept { return k_max_ - k_min_ + 1; }

    /// Probability of degree k. Degrees outside [k_min, k_max] are a
    /// DomainError, not probability zero: the model excludes them.
    double pmf(int k) const;

    /// Inclusive upper tail P(K >= k). ccdf(k_min) == 1 exactly.
    double ccdf(int k) const;

    /// P(K <= k); cdf(k_max) == 1 exactly.
    double cdf(int k) const;

    /// Smallest k in support with cdf(k) >= u, for u in [0, 1).
    int quantile(double u) const;

    /// Z(lambda-1) / Z(lambda); always lies in [k_min, k_max].
    double mean_degree() const;

    /// cdf values for k = k_min..k_max, accumulated with exactly the same
    /// arithmetic quantile() uses, so a binary search over this table gives
    /// bit-identical results to quantile(). Used by the sampler.
    std::vector<double> cumulative_table() const;

private:
    double lambda_;
    int k_min_;
    int k_max_;
    double z_norm_;
};

}  // namespace astopo
