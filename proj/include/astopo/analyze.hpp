#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "astopo/fit.hpp"
#include "astopo/graph.hpp"
#include "astopo/metrics.hpp"
#include "astopo/powerlaw.hpp"

namespace astopo {

/// Consolidated model metrics for one parameter set.
struct TheoryTable {
    double lambda = 0.0;
    int k_min = 0;
    int k_max = 0;
    double mean_degree = 0.0;
    double r_kmin = 0.0;
    double r_kmax = 0.0;
    /// (target R_nodes, model R_degrees) at the configured targets.
    std::vector<std::pair<double, double>> rich;
};

TheoryTable theory_table(const BoundedPowerLaw& d, std::span<const double> targets);

/// Redistribute the observed mass of degree-1..top_degree nodes with
/// power-law weights and report the implied 1-degree ratio:
/// (sum of observed ratios) / sum_{k=1}^{top} k^{-lambda}.
/// Throws DomainError when top_degree is absent from the histogram.
double renormalize_low_degree_ratio(const std::map<int, std::int64_t>& histogram,
                                    double lambda, int top_degree);

/// Fraction of total degree held by the top `target` fraction of nodes,
/// nodes sorted by degree descending with fractional inclusion at the
/// boundary, matching the convention the model curve uses.
double empirical_rich_fraction(std::span<const int> degrees, double target);

struct AnalyzeConfig {
    FitConfig fit;
    std::vector<double> targets{0.20, 0.27};
    /// Substitute the network scale n for k_max in the mean-degree formula
    /// (adds a separate report row).
    bool use_n_as_kmax = false;
    /// Low-degree classes pooled by the renormalized empirical ratio.
    int renorm_top_degree = 3;
};

/// One theory-vs-empirical comparison.
struct ReportRow {
    std::string metric;
    std::string method;
    double theoretical = 0.0;
    double empirical = 0.0;
    double rel_error = 0.0;  // |theoretical - empirical| / empirical
    std::string note;
};

struct ComparisonReport {
    std::vector<ReportRow> rows;
};

struct AnalysisResult {
    std::string dataset;
    GraphSummary summary;
    CleanStats clean_stats;
    FitResult fit;
    ComparisonReport report;
};

/// Full pipeline over a raw edge list: clean -> summarize -> fit -> compare.
AnalysisResult analyze_edges(const std::string& dataset, const EdgeList& raw,
                             const AnalyzeConfig& config);

/// analyze_edges over a file path (the dataset name is the path).
AnalysisResult analyze_file(const std::string& path, const AnalyzeConfig& config);

}  // namespace astopo
