#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "astopo/powerlaw.hpp"

namespace astopo {

struct FitOptions {
    /// Exponent search bracket; wide enough for any empirical scale-free
    /// exponent while staying clear of the lambda -> 0 degenerate region.
    double lambda_lo = 1.05;
    double lambda_hi = 6.0;
    /// Stationarity tolerance: |dL/dlambda| <= tolerance * n_tail at the
    /// returned estimate.
    double tolerance = 1e-8;
    /// Cutoff pairs leaving fewer in-range degrees than this are rejected
    /// during scans; below 10 the KS statistic is noise.
    int min_tail = 10;
    /// Scan candidates: the lowest / highest distinct observed degrees.
    int max_kmin_candidates = 8;
    int max_kmax_candidates = 16;
};

enum class CutoffStrategy {
    Fixed,  // use the configured (k_min, k_max), validated against the data
    Scan,   // KS-minimizing search over observed low/high degrees
};

struct FitConfig {
    CutoffStrategy strategy = CutoffStrategy::Fixed;
    /// Fixed-strategy cutoffs; k_max == 0 means "largest observed degree".
    int k_min = 1;
    int k_max = 0;
    FitOptions options;
};

struct FitResult {
    double lambda_hat = 0.0;
    int k_min = 0;
    int k_max = 0;
    std::int64_t n_tail = 0;
    double log_likelihood = 0.0;
    double ks_stat = 0.0;
};

/// Log-likelihood of in-range degrees under the bounded power law:
/// -lambda * sum(ln k_i) - n * ln Z(lambda, k_min, k_max).
/// Throws DomainError if any degree lies outside [k_min, k_max].
double log_likelihood(std::span<const int> degrees, double lambda, int k_min, int k_max);

/// Maximum-likelihood exponent over the in-range subsample, by bracketed
/// golden-section search refined with Newton steps on the score. Throws
/// DataError when fewer than two degrees are in range, when all in-range
/// degrees are equal (exponent unidentifiable), or when the maximum sits on
/// the bracket boundary.
double mle_lambda(std::span<const int> degrees, int k_min, int k_max,
                  const FitOptions& options = {});

/// Max over k in the model support of |empirical CDF(k) - model CDF(k)|,
/// with the empirical CDF taken over the in-range subsample.
/// Throws DataError when no degree falls inside the support.
double ks_statistic(std::span<const int> degrees, const BoundedPowerLaw& model);

/// Resolve cutoffs per the configured strategy. The scan refits the exponent
/// for every candidate pair and returns the pair minimizing the KS statistic,
/// ties broken by larger tail count then smaller k_min.
std::pair<int, int> select_cutoffs(std::span<const int> degrees, const FitConfig& config);

/// select_cutoffs + mle_lambda + ks_statistic composed into one result.
FitResult fit(std::span<const int> degrees, const FitConfig& config = {});

}  // namespace astopo
