#include "astopo/analyze.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "astopo/errors.hpp"

namespace astopo {

TheoryTable theory_table(const BoundedPowerLaw& d, std::span<const double> targets) {
    TheoryTable out;
    out.lambda = d.lambda();
    out.k_min = d.k_min();
    out.k_max = d.k_max();
    out.mean_degree = d.mean_degree();
    out.r_kmin = ratio_min_degree(d);
    out.r_kmax = ratio_max_degree(d);
    out.rich.reserve(targets.size());
    for (double target : targets) {
        out.rich.emplace_back(target, degrees_at_top_fraction(d, target));
    }
    return out;
}

double renormalize_low_degree_ratio(const std::map<int, std::int64_t>& histogram,
                                    double lambda, int top_degree) {
    if (!(lambda > 0.0)) {
        throw DomainError("renormalize_low_degree_ratio: lambda must be positive");
    }
    if (top_degree < 1) {
        throw DomainError("renormalize_low_degree_ratio: top_degree must be >= 1");
    }
    std::int64_t total = 0;
    for (const auto& [degree, count] : histogram) {
        total += count;
    }
    if (total == 0) {
        throw DomainError("renormalize_low_degree_ratio: empty histogram");
    }
    std::int64_t low_mass = 0;
    for (int k = 1; k <= top_degree; ++k) {
        const auto it = histogram.find(k);
        if (it == histogram.end()) {
            throw DomainError("renormalize_low_degree_ratio: degree " + std::to_string(k) +
                              " absent from histogram");
        }
        low_mass += it->second;
    }
    const double observed = static_cast<double>(low_mass) / static_cast<double>(total);
    // Redistribute the pooled low-degree mass with power-law weights; the
    // k = 1 share is observed / sum_{k=1}^{top} k^{-lambda}.
    return observed / truncated_zeta(lambda, 1, top_degree);
}

double empirical_rich_fraction(std::span<const int> degrees, double target) {
    if (!(target > 0.0) || target > 1.0) {
        throw DomainError("empirical_rich_fraction: target must lie in (0, 1], got " +
                          std::to_string(target));
    }
    if (degrees.empty()) {
        throw DataError("empirical_rich_fraction: empty degree sequence");
    }
    std::vector<int> sorted(degrees.begin(), degrees.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    std::int64_t total = 0;
    for (int d : sorted) {
        total += d;
    }
    if (total == 0) {
        throw DataError("empirical_rich_fraction: all degrees are zero");
    }
    // Top target*n nodes with fractional inclusion of the boundary node --
    // within a degree class this equals the model's linear interpolation.
    const double cut = target * static_cast<double>(sorted.size());
    const auto whole = static_cast<std::size_t>(cut);
    std::int64_t mass = 0;
    for (std::size_t i = 0; i < whole && i < sorted.size(); ++i) {
        mass += sorted[i];
    }
    double value = static_cast<double>(mass);
    if (whole < sorted.size()) {
        value += (cut - static_cast<double>(whole)) * static_cast<double>(sorted[whole]);
    }
    return value / static_cast<double>(total);
}

namespace {

ReportRow make_row(std::string metric, std::string method, double theoretical,
                   double empirical, std::string note = {}) {
    ReportRow row;
    row.metric = std::move(metric);
    row.method = std::move(method);
    row.theoretical = theoretical;
    row.empirical = empirical;
    if (empirical != 0.0) {
        row.rel_error = std::abs(theoretical - empirical) / std::abs(empirical);
    } else {
        row.rel_error = std::numeric_limits<double>::quiet_NaN();
        note = note.empty() ? "empirical value is zero" : note + "; empirical value is zero";
    }
    row.note = std::move(note);
    return row;
}

std::string target_label(double target) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", target);
    return std::string("rich_degrees_top") + buf;
}

}  // namespace

AnalysisResult analyze_edges(const std::string& dataset, const EdgeList& raw,
                             const AnalyzeConfig& config) {
    AnalysisResult out;
    out.dataset = dataset;

    CleanResult cleaned = clean(raw);
    const DegreeSequence seq = degree_sequence(cleaned.edges);
    out.clean_stats = cleaned.stats;
    out.summary = summarize(seq, static_cast<std::int64_t>(cleaned.edges.edges.size()));
    out.fit = fit(seq.degrees, config.fit);

    const BoundedPowerLaw model(out.fit.lambda_hat, out.fit.k_min, out.fit.k_max);
    const auto hist = degree_histogram(seq);
    auto& rows = out.report.rows;

    rows.push_back(make_row("mean_degree", "bounded", model.mean_degree(),
                            out.summary.avg_degree0));
    if (config.use_n_as_kmax) {
        const BoundedPowerLaw substituted(out.fit.lambda_hat, out.fit.k_min,
                                          static_cast<int>(out.summary.n));
        rows.push_back(make_row("mean_degree", "bounded_n_as_kmax",
                                substituted.mean_degree(), out.summary.avg_degree0,
                                "network scale n substituted for k_max"));
    }
    if (out.fit.lambda_hat > 2.0) {
        rows.push_back(make_row("mean_degree", "newman",
                                newman_mean_degree(out.fit.lambda_hat, out.fit.k_min),
                                out.summary.avg_degree0));
    }

    // Low-degree comparison only makes sense when the fit starts at degree 1
    // and the pooled classes all occur in the data.
    bool renormalizable = out.fit.k_min == 1;
    for (int k = 1; renormalizable && k <= config.renorm_top_degree; ++k) {
        renormalizable = hist.count(k) > 0;
    }
    if (renormalizable) {
        const double renorm =
            renormalize_low_degree_ratio(hist, out.fit.lambda_hat, config.renorm_top_degree);
        const std::string note = "vs renormalized low-degree mass (reconstruction)";
        rows.push_back(make_row("r_kmin", "bounded", ratio_min_degree(model), renorm, note));
        rows.push_back(make_row("r_kmin", "xpp", xpp_min_ratio_reference(), renorm, note));
    }

    const auto top_it = hist.find(out.fit.k_max);
    const double top_count = top_it == hist.end() ? 0.0 : static_cast<double>(top_it->second);
    rows.push_back(make_row("r_kmax", "bounded", ratio_max_degree(model),
                            top_count / static_cast<double>(out.summary.n)));

    std::vector<int> in_range;
    in_range.reserve(seq.degrees.size());
    for (int d : seq.degrees) {
        if (d >= out.fit.k_min && d <= out.fit.k_max) {
            in_range.push_back(d);
        }
    }
    for (double target : config.targets) {
        const double empirical = empirical_rich_fraction(in_range, target);
        const std::string metric = target_label(target);
        rows.push_back(make_row(metric, "bounded",
                                degrees_at_top_fraction(model, target), empirical));
        if (out.fit.lambda_hat > 2.0) {
            rows.push_back(make_row(metric, "newman",
                                    newman_rich_fraction(out.fit.lambda_hat, target),
                                    empirical));
        }
    }
    return out;
}

AnalysisResult analyze_file(const std::string& path, const AnalyzeConfig& config) {
    return analyze_edges(path, load_edge_list(path), config);
}

}  // namespace astopo
