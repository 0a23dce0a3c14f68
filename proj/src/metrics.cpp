#include "astopo/metrics.hpp"

#include <cmath>
#include <string>

#include "astopo/errors.hpp"
#include "kahan.hpp"

namespace astopo {

namespace {

// Tail sums for both exponents accumulated in one descending pass, the same
// order the normalizer uses.  recorded_* capture the state at degree `stop`;
// the full sums land in node_norm / degree_norm.  Running numerator and
// denominator through identical arithmetic makes the k_min point exactly 1.
struct TailSums {
    double node_tail = 0.0;
    double degree_tail = 0.0;
    double node_norm = 0.0;
    double degree_norm = 0.0;
};

TailSums tail_sums(const BoundedPowerLaw& d, int stop) {
    TailSums out;
    detail::KahanSum nodes;
    detail::KahanSum degrees;
    for (int j = d.k_max(); j >= d.k_min(); --j) {
        const double base = static_cast<double>(j);
        nodes.add(std::pow(base, -d.lambda()));
        degrees.add(std::pow(base, -(d.lambda() - 1.0)));
        if (j == stop) {
            out.node_tail = nodes.value();
            out.degree_tail = degrees.value();
        }
    }
    out.node_norm = nodes.value();
    out.degree_norm = degrees.value();
    return out;
}

void require_in_support(const BoundedPowerLaw& d, int k, const char* op) {
    if (k < d.k_min() || k > d.k_max()) {
        throw DomainError(std::string(op) + ": degree " + std::to_string(k) +
                          " outside support [" + std::to_string(d.k_min()) + ", " +
                          std::to_string(d.k_max()) + "]");
    }
}

double decay_exponent_fit(const std::vector<std::array<double, 2>>& rows) {
    // Least squares on (log x, log y); gamma is the negated slope.
    detail::KahanSum sx, sy, sxx, sxy;
    std::int64_t n = 0;
    for (const auto& row : rows) {
        if (!(row[0] > 0.0) || !(row[1] > 0.0)) {
            continue;
        }
        const double x = std::log(row[0]);
        const double y = std::log(row[1]);
        sx.add(x);
        sy.add(y);
        sxx.add(x * x);
        sxy.add(x * y);
        ++n;
    }
    if (n < 3) {
        throw DomainError("decay fit: needs at least 3 positive points");
    }
    const double nn = static_cast<double>(n);
    const double denom = nn * sxx.value() - sx.value() * sx.value();
    if (denom == 0.0) {
        throw DomainError("decay fit: degenerate abscissa");
    }
    const double slope = (nn * sxy.value() - sx.value() * sy.value()) / denom;
    return -slope;
}

}  // namespace

double ratio_min_degree(const BoundedPowerLaw& d) { return d.pmf(d.k_min()); }

double ratio_max_degree(const BoundedPowerLaw& d) { return d.pmf(d.k_max()); }

RichPoint rich_fractions(const BoundedPowerLaw& d, int k) {
    require_in_support(d, k, "rich_fractions");
    const TailSums sums = tail_sums(d, k);
    return RichPoint{k, sums.node_tail / sums.node_norm,
                     sums.degree_tail / sums.degree_norm};
}

std::vector<RichPoint> rich_curve(const BoundedPowerLaw& d) {
    // Pass one fixes the normalizers, pass two replays the identical sweep
    // emitting one point per degree; the k_min point divides each sum by
    // itself and is exactly (1, 1).
    const TailSums norms = tail_sums(d, d.k_min() - 1);
    std::vector<RichPoint> curve;
    curve.reserve(static_cast<std::size_t>(d.support_size()));
    detail::KahanSum nodes;
    detail::KahanSum degrees;
    for (int j = d.k_max(); j >= d.k_min(); --j) {
        const double base = static_cast<double>(j);
        nodes.add(std::pow(base, -d.lambda()));
        degrees.add(std::pow(base, -(d.lambda() - 1.0)));
        curve.push_back(RichPoint{j, nodes.value() / norms.node_norm,
                                  degrees.value() / norms.degree_norm});
    }
    return curve;
}

double degrees_at_top_fraction(const BoundedPowerLaw& d, double target_r_nodes) {
    if (!(target_r_nodes > 0.0) || target_r_nodes > 1.0) {
        throw DomainError("degrees_at_top_fraction: target must lie in (0, 1], got " +
                          std::to_string(target_r_nodes));
    }
    if (target_r_nodes == 1.0) {
        return 1.0;
    }
    const TailSums norms = tail_sums(d, d.k_min() - 1);
    double prev_nodes = 0.0;
    double prev_degrees = 0.0;
    detail::KahanSum nodes;
    detail::KahanSum degrees;
    for (int j = d.k_max(); j >= d.k_min(); --j) {
        const double base = static_cast<double>(j);
        nodes.add(std::pow(base, -d.lambda()));
        degrees.add(std::pow(base, -(d.lambda() - 1.0)));
        const double r_nodes = nodes.value() / norms.node_norm;
        const double r_degrees = degrees.value() / norms.degree_norm;
        if (r_nodes >= target_r_nodes) {
            // Include the boundary degree class fractionally.
            const double span = r_nodes - prev_nodes;
            if (span <= 0.0) {
                return r_degrees;
            }
            const double frac = (target_r_nodes - prev_nodes) / span;
            return prev_degrees + frac * (r_degrees - prev_degrees);
        }
        prev_nodes = r_nodes;
        prev_degrees = r_degrees;
    }
    return 1.0;  // unreachable: r_nodes reaches 1 at k_min
}

double newman_mean_degree(double lambda, int k_min) {
    if (!(lambda > 2.0)) {
        throw DomainError("newman_mean_degree: defined only for lambda > 2, got " +
                          std::to_string(lambda));
    }
    if (k_min < 1) {
        throw DomainError("newman_mean_degree: k_min must be >= 1");
    }
    return (lambda - 1.0) / (lambda - 2.0) * static_cast<double>(k_min);
}

double newman_rich_fraction(double lambda, double r_nodes) {
    if (!(lambda > 2.0)) {
        throw DomainError("newman_rich_fraction: defined only for lambda > 2, got " +
                          std::to_string(lambda));
    }
    if (!(r_nodes > 0.0) || r_nodes > 1.0) {
        throw DomainError("newman_rich_fraction: r_nodes must lie in (0, 1], got " +
                          std::to_string(r_nodes));
    }
    return std::pow(r_nodes, (lambda - 2.0) / (lambda - 1.0));
}

double xpp_min_ratio_reference() { return 0.608; }

namespace {

double sweep_point(SweepMetric metric, SweepParameter varied, double value, double step,
                   const SweepRequest& request) {
    const auto resolve = [&](double v) {
        double lambda = request.lambda;
        int k_min = request.k_min;
        int k_max = request.k_max;
        switch (varied) {
            case SweepParameter::Lambda: lambda = v; break;
            case SweepParameter::KMin: k_min = static_cast<int>(std::llround(v)); break;
            case SweepParameter::KMax: k_max = static_cast<int>(std::llround(v)); break;
        }
        return BoundedPowerLaw(lambda, k_min, k_max);
    };
    switch (metric) {
        case SweepMetric::MeanDegree:
            return resolve(value).mean_degree();
        case SweepMetric::RatioMinDegree:
            return ratio_min_degree(resolve(value));
        case SweepMetric::RatioMaxDegree:
            return ratio_max_degree(resolve(value));
        case SweepMetric::MeanDegreeRate:
            return (resolve(value + step).mean_degree() - resolve(value).mean_degree()) / step;
    }
    throw DomainError("sweep: unknown metric");
}

}  // namespace

SweepTable sweep(const SweepRequest& request) {
    if (!std::isfinite(request.from) || !std::isfinite(request.to) ||
        !(request.step > 0.0) || request.to < request.from) {
        throw DomainError("sweep: range must satisfy from <= to with positive step");
    }
    const auto count = static_cast<std::int64_t>(
        std::floor((request.to - request.from) / request.step + 1e-9));
    SweepTable table;
    table.varied_parameter = to_string(request.varied);
    table.metric = to_string(request.metric);
    table.rows.reserve(static_cast<std::size_t>(count) + 1);
    for (std::int64_t i = 0; i <= count; ++i) {
        const double value = request.from + static_cast<double>(i) * request.step;
        table.rows.push_back(
            {value, sweep_point(request.metric, request.varied, value, request.step, request)});
    }
    if (request.fit_decay && table.rows.size() >= 3) {
        table.decay_exponent = decay_exponent_fit(table.rows);
    }
    return table;
}

std::string to_string(SweepMetric metric) {
    switch (metric) {
        case SweepMetric::MeanDegree: return "mean_degree";
        case SweepMetric::RatioMinDegree: return "ratio_min_degree";
        case SweepMetric::RatioMaxDegree: return "ratio_max_degree";
        case SweepMetric::MeanDegreeRate: return "mean_degree_rate";
    }
    return "unknown";
}

std::string to_string(SweepParameter parameter) {
    switch (parameter) {
        case SweepParameter::Lambda: return "lambda";
        case SweepParameter::KMin: return "k_min";
        case SweepParameter::KMax: return "k_max";
    }
    return "unknown";
}

SweepMetric sweep_metric_from_string(const std::string& name) {
    if (name == "mean_degree") return SweepMetric::MeanDegree;
    if (name == "ratio_min_degree") return SweepMetric::RatioMinDegree;
    if (name == "ratio_max_degree") return SweepMetric::RatioMaxDegree;
    if (name == "mean_degree_rate") return SweepMetric::MeanDegreeRate;
    throw DomainError("unknown sweep metric: " + name);
}

SweepParameter sweep_parameter_from_string(const std::string& name) {
    if (name == "lambda") return SweepParameter::Lambda;
    if (name == "k_min") return SweepParameter::KMin;
    if (name == "k_max") return SweepParameter::KMax;
    throw DomainError("unknown sweep parameter: " + name);
}

}  // namespace astopo
