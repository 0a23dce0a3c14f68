#include "astopo/fit.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "astopo/errors.hpp"
#include "kahan.hpp"

namespace astopo {

namespace {

struct TailStats {
    std::int64_t n = 0;
    double sum_log = 0.0;    // sum of ln k over in-range degrees
    bool all_equal = true;
    int first = 0;
};

TailStats tail_stats(std::span<const int> degrees, int k_min, int k_max) {
    TailStats out;
    detail::KahanSum logs;
    for (int d : degrees) {
        if (d < k_min || d > k_max) {
            continue;
        }
        if (out.n == 0) {
            out.first = d;
        } else if (d != out.first) {
            out.all_equal = false;
        }
        ++out.n;
        logs.add(std::log(static_cast<double>(d)));
    }
    out.sum_log = logs.value();
    return out;
}

// Model moments of ln k: dL/dlambda = -sum_log + n * E[ln k], and
// d2L/dlambda2 = -n * Var[ln k] < 0, so the likelihood is strictly concave
// and the score strictly decreasing.
struct LogMoments {
    double z = 0.0;
    double mean = 0.0;
    double var = 0.0;
};

LogMoments log_moments(double lambda, int k_min, int k_max) {
    detail::KahanSum z, zl, zll;
    for (int k = k_max; k >= k_min; --k) {
        const double w = std::pow(static_cast<double>(k), -lambda);
        const double lk = std::log(static_cast<double>(k));
        z.add(w);
        zl.add(w * lk);
        zll.add(w * lk * lk);
    }
    LogMoments out;
    out.z = z.value();
    out.mean = zl.value() / out.z;
    out.var = zll.value() / out.z - out.mean * out.mean;
    return out;
}

}  // namespace

double log_likelihood(std::span<const int> degrees, double lambda, int k_min, int k_max) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw DomainError("log_likelihood: lambda must be positive");
    }
    detail::KahanSum logs;
    for (int d : degrees) {
        if (d < k_min || d > k_max) {
            throw DomainError("log_likelihood: degree " + std::to_string(d) +
                              " outside [" + std::to_string(k_min) + ", " +
                              std::to_string(k_max) + "]");
        }
        logs.add(std::log(static_cast<double>(d)));
    }
    const double z = truncated_zeta(lambda, k_min, k_max);
    return -lambda * logs.value() -
           static_cast<double>(degrees.size()) * std::log(z);
}

double mle_lambda(std::span<const int> degrees, int k_min, int k_max,
                  const FitOptions& options) {
    if (k_min < 1 || k_max < k_min) {
        throw DomainError("mle_lambda: requires 1 <= k_min <= k_max");
    }
    const TailStats stats = tail_stats(degrees, k_min, k_max);
    if (stats.n < 2) {
        throw DataError("mle_lambda: fewer than two degrees in [" +
                        std::to_string(k_min) + ", " + std::to_string(k_max) + "]");
    }
    if (stats.all_equal) {
        throw DataError("mle_lambda: all in-range degrees equal " +
                        std::to_string(stats.first) + "; exponent unidentifiable");
    }

    const double n = static_cast<double>(stats.n);
    const auto score = [&](double lambda) {
        return -stats.sum_log + n * log_moments(lambda, k_min, k_max).mean;
    };

    // The score is strictly decreasing; a sign change across the bracket is
    // exactly an interior maximum.
    double lo = options.lambda_lo;
    double hi = options.lambda_hi;
    if (score(lo) <= 0.0) {
        throw DataError("mle_lambda: likelihood maximum at or below the bracket lower end " +
                        std::to_string(lo));
    }
    if (score(hi) >= 0.0) {
        throw DataError("mle_lambda: likelihood maximum at or above the bracket upper end " +
                        std::to_string(hi));
    }

    // Golden-section on the negated likelihood narrows the bracket, then
    // Newton steps on the score polish to the stationarity tolerance.
    const auto objective = [&](double lambda) {
        return lambda * stats.sum_log +
               n * std::log(truncated_zeta(lambda, k_min, k_max));
    };
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = objective(c);
    double fd = objective(d);
    while (b - a > 1e-4) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = objective(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = objective(d);
        }
    }

    double lambda = 0.5 * (a + b);
    const double tol = options.tolerance * n;
    for (int iter = 0; iter < 64; ++iter) {
        const LogMoments mom = log_moments(lambda, k_min, k_max);
        const double s = -stats.sum_log + n * mom.mean;
        if (std::abs(s) <= tol) {
            return lambda;
        }
        const double derivative = -n * mom.var;
        double next = lambda - s / derivative;
        if (next <= options.lambda_lo || next >= options.lambda_hi) {
            next = 0.5 * (lambda + (s > 0.0 ? options.lambda_hi : options.lambda_lo));
        }
        lambda = next;
    }
    return lambda;
}

double ks_statistic(std::span<const int> degrees, const BoundedPowerLaw& model) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(model.support_size()), 0);
    std::int64_t n_in = 0;
    for (int d : degrees) {
        if (d < model.k_min() || d > model.k_max()) {
            continue;
        }
        ++counts[static_cast<std::size_t>(d - model.k_min())];
        ++n_in;
    }
    if (n_in == 0) {
        throw DataError("ks_statistic: no degree falls inside the model support");
    }
    const std::vector<double> cdf = model.cumulative_table();
    double worst = 0.0;
    std::int64_t cum = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        cum += counts[i];
        const double empirical = static_cast<double>(cum) / static_cast<double>(n_in);
        worst = std::max(worst, std::abs(empirical - cdf[i]));
    }
    return worst;
}

namespace {

std::int64_t count_in_range(const std::vector<int>& sorted, int k_min, int k_max) {
    const auto lo = std::lower_bound(sorted.begin(), sorted.end(), k_min);
    const auto hi = std::upper_bound(sorted.begin(), sorted.end(), k_max);
    return hi - lo;
}

}  // namespace

std::pair<int, int> select_cutoffs(std::span<const int> degrees, const FitConfig& config) {
    if (degrees.empty()) {
        throw DataError("select_cutoffs: empty degree sequence");
    }
    std::vector<int> sorted(degrees.begin(), degrees.end());
    std::sort(sorted.begin(), sorted.end());

    if (config.strategy == CutoffStrategy::Fixed) {
        const int k_min = config.k_min;
        const int k_max = config.k_max > 0 ? config.k_max : sorted.back();
        if (k_min < 1 || k_max < k_min) {
            throw DomainError("select_cutoffs: requires 1 <= k_min <= k_max");
        }
        if (count_in_range(sorted, k_min, k_max) < 2) {
            throw DataError("select_cutoffs: fewer than two degrees inside fixed cutoffs [" +
                            std::to_string(k_min) + ", " + std::to_string(k_max) + "]");
        }
        return {k_min, k_max};
    }

    std::vector<int> distinct(sorted);
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    const std::size_t n_lo = std::min<std::size_t>(
        distinct.size(), static_cast<std::size_t>(std::max(config.options.max_kmin_candidates, 1)));
    const std::size_t n_hi = std::min<std::size_t>(
        distinct.size(), static_cast<std::size_t>(std::max(config.options.max_kmax_candidates, 1)));

    bool found = false;
    int best_kmin = 0;
    int best_kmax = 0;
    double best_ks = 0.0;
    std::int64_t best_tail = 0;
    for (std::size_t i = 0; i < n_lo; ++i) {
        const int k_min = distinct[i];
        for (std::size_t j = 0; j < n_hi; ++j) {
            const int k_max = distinct[distinct.size() - 1 - j];
            if (k_max <= k_min) {
                continue;  // at most one distinct degree in range
            }
            const std::int64_t tail = count_in_range(sorted, k_min, k_max);
            if (tail < config.options.min_tail) {
                continue;
            }
            double lambda = 0.0;
            try {
                lambda = mle_lambda(degrees, k_min, k_max, config.options);
            } catch (const DataError&) {
                continue;  // boundary maximum: not a usable candidate
            }
            const double ks =
                ks_statistic(degrees, BoundedPowerLaw(lambda, k_min, k_max));
            const bool better =
                !found || ks < best_ks ||
                (ks == best_ks &&
                 (tail > best_tail || (tail == best_tail && k_min < best_kmin)));
            if (better) {
                found = true;
                best_kmin = k_min;
                best_kmax = k_max;
                best_ks = ks;
                best_tail = tail;
            }
        }
    }
    if (!found) {
        throw DataError("select_cutoffs: no candidate pair leaves at least " +
                        std::to_string(config.options.min_tail) + " degrees in range");
    }
    return {best_kmin, best_kmax};
}

FitResult fit(std::span<const int> degrees, const FitConfig& config) {
    const auto [k_min, k_max] = select_cutoffs(degrees, config);
    const double lambda = mle_lambda(degrees, k_min, k_max, config.options);
    const BoundedPowerLaw model(lambda, k_min, k_max);

    std::vector<int> in_range;
    in_range.reserve(degrees.size());
    for (int d : degrees) {
        if (d >= k_min && d <= k_max) {
            in_range.push_back(d);
        }
    }
    FitResult out;
    out.lambda_hat = lambda;
    out.k_min = k_min;
    out.k_max = k_max;
    out.n_tail = static_cast<std::int64_t>(in_range.size());
    out.log_likelihood = log_likelihood(in_range, lambda, k_min, k_max);
    out.ks_stat = ks_statistic(degrees, model);
    return out;
}

}  // namespace astopo
