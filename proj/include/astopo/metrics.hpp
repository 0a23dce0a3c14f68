#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "astopo/powerlaw.hpp"

namespace astopo {

/// One point of the degree-concentration curve: the fraction of nodes with
/// degree >= threshold_k and the fraction of total degree those nodes hold.
struct RichPoint {
    int threshold_k = 0;
    double r_nodes = 0.0;
    double r_degrees = 0.0;
};

/// Fraction of nodes carrying exactly the minimum degree: pmf at k_min.
double ratio_min_degree(const BoundedPowerLaw& d);

/// Fraction of nodes carrying exactly the maximum degree: pmf at k_max.
double ratio_max_degree(const BoundedPowerLaw& d);

/// Node and degree fractions of the inclusive tail starting at k.
RichPoint rich_fractions(const BoundedPowerLaw& d, int k);

/// The whole curve, one point per k from k_max down to k_min. r_nodes is
/// strictly increasing along the list and the final point is exactly (1, 1).
std::vector<RichPoint> rich_curve(const BoundedPowerLaw& d);

/// R_degrees at a requested R_nodes in (0, 1]. Targets rarely land on a
/// degree-class boundary, so the boundary class is included fractionally:
/// linear interpolation between adjacent curve points (with (0,0) below the
/// top class).
double degrees_at_top_fraction(const BoundedPowerLaw& d, double target_r_nodes);

/// Unbounded-model mean degree (lambda-1)/(lambda-2) * k_min; pole at 2.
double newman_mean_degree(double lambda, int k_min);

/// Unbounded-model closed form R_degrees = R_nodes^((lambda-2)/(lambda-1)).
double newman_rich_fraction(double lambda, double r_nodes);

/// Documented comparator constant 0.608 for the minimum-degree node ratio.
/// A constant, not a formula: independent of lambda, k_min, k_max.
double xpp_min_ratio_reference();

enum class SweepMetric {
    MeanDegree,
    RatioMinDegree,
    RatioMaxDegree,
    /// Forward difference of the mean degree along the varied parameter.
    MeanDegreeRate,
};

enum class SweepParameter { Lambda, KMin, KMax };

struct SweepRequest {
    SweepMetric metric = SweepMetric::MeanDegree;
    SweepParameter varied = SweepParameter::Lambda;
    double from = 0.0;
    double to = 0.0;
    double step = 0.0;
    /// Fixed values for the two parameters not being varied.
    double lambda = 2.25;
    int k_min = 1;
    int k_max = 1500;
    bool fit_decay = false;
};

struct SweepTable {
    std::string varied_parameter;                 // "lambda" | "k_min" | "k_max"
    std::string metric;                           // metric name
    std::vector<std::array<double, 2>> rows;      // (parameter value, metric value)
    /// Decay rate gamma = negative slope of the least-squares line on
    /// (log parameter, log metric). Present only when fit_decay was set and
    /// the table has at least 3 rows.
    std::optional<double> decay_exponent;
};

/// Evaluate one metric over a parameter range. The caller supplies the
/// window; power-law decay only holds in sub-ranges (low k_min, or
/// k_max >= 10 * k_min for the max-degree ratio).
SweepTable sweep(const SweepRequest& request);

std::string to_string(SweepMetric metric);
std::string to_string(SweepParameter parameter);
SweepMetric sweep_metric_from_string(const std::string& name);
SweepParameter sweep_parameter_from_string(const std::string& name);

}  // namespace astopo
