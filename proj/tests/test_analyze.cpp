#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <doctest.h>

#include "astopo/analyze.hpp"
#include "astopo/errors.hpp"
#include "astopo/graph.hpp"
#include "astopo/io.hpp"
#include "astopo/metrics.hpp"
#include "astopo/powerlaw.hpp"
#include "astopo/synth.hpp"

using astopo::AnalysisResult;
using astopo::AnalyzeConfig;
using astopo::BoundedPowerLaw;
using astopo::CutoffStrategy;
using astopo::DataError;
using astopo::DomainError;
using astopo::EdgeList;
using astopo::empirical_rich_fraction;
using astopo::RandomState;
using astopo::renormalize_low_degree_ratio;
using astopo::ReportRow;
using astopo::TheoryTable;

namespace {

doctest::Approx near(double value, double rel = 1e-12) {
    return doctest::Approx(value).epsilon(rel);
}

const ReportRow* find_row(const AnalysisResult& result, const std::string& metric,
                          const std::string& method) {
    for (const ReportRow& row : result.report.rows) {
        if (row.metric == metric && row.method == method) {
            return &row;
        }
    }
    return nullptr;
}

EdgeList synthetic_edges(std::int64_t n, std::uint64_t seed) {
    const BoundedPowerLaw d(2.25, 1, 1500);
    RandomState state(seed);
    const astopo::DegreeSequence seq = astopo::sample_degrees(d, n, state);
    return astopo::configuration_model(seq, state, true).edges;
}

}  // namespace

TEST_CASE("theory table repeats the individual metrics") {
    const BoundedPowerLaw d(2.25, 1, 1500);
    const std::vector<double> targets{0.20, 0.27};
    const TheoryTable table = astopo::theory_table(d, targets);
    CHECK(table.lambda == 2.25);
    CHECK(table.k_min == 1);
    CHECK(table.k_max == 1500);
    CHECK(table.mean_degree == d.mean_degree());
    CHECK(table.r_kmin == astopo::ratio_min_degree(d));
    CHECK(table.r_kmax == astopo::ratio_max_degree(d));
    REQUIRE(table.rich.size() == 2);
    CHECK(table.rich[0].first == 0.20);
    CHECK(table.rich[0].second == astopo::degrees_at_top_fraction(d, 0.20));
    CHECK(table.rich[1].first == 0.27);
    CHECK(table.rich[1].second == astopo::degrees_at_top_fraction(d, 0.27));
}

TEST_CASE("low-degree renormalization reproduces the worked example") {
    // Observed shares 34.6% / 40.6% / 11.0% for degrees 1..3.
    const std::map<int, std::int64_t> hist{{1, 346}, {2, 406}, {3, 110}, {4, 138}};
    CHECK(renormalize_low_degree_ratio(hist, 2.25, 3) == near(0.66581686646997283));
}

TEST_CASE("renormalization limits") {
    // Pooling only degree 1 returns its share unchanged.
    const std::map<int, std::int64_t> only_ones{{1, 5}};
    CHECK(renormalize_low_degree_ratio(only_ones, 2.25, 1) == 1.0);

    const std::map<int, std::int64_t> hist{{1, 40}, {2, 35}, {3, 25}};
    CHECK(renormalize_low_degree_ratio(hist, 3.5, 1) == near(0.40));

    // Flat weights at lambda -> 0 split the pooled mass evenly.
    CHECK(renormalize_low_degree_ratio(hist, 1e-9, 3) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-6));
}

TEST_CASE("renormalization rejects unusable inputs") {
    const std::map<int, std::int64_t> gap{{1, 5}, {3, 2}};
    CHECK_THROWS_AS(renormalize_low_degree_ratio(gap, 2.25, 3), DomainError);
    const std::map<int, std::int64_t> hist{{1, 5}, {2, 2}};
    CHECK_THROWS_AS(renormalize_low_degree_ratio(hist, 0.0, 2), DomainError);
    CHECK_THROWS_AS(renormalize_low_degree_ratio(hist, 2.25, 0), DomainError);
    CHECK_THROWS_AS(renormalize_low_degree_ratio({}, 2.25, 1), DomainError);
}

TEST_CASE("empirical rich fraction by hand") {
    const std::vector<int> degrees{4, 3, 2, 1};
    CHECK(empirical_rich_fraction(degrees, 0.5) == near(0.7));
    CHECK(empirical_rich_fraction(degrees, 0.25) == near(0.4));
    CHECK(empirical_rich_fraction(degrees, 0.375) == near(0.55));
    CHECK(empirical_rich_fraction(degrees, 1.0) == 1.0);

    const std::vector<int> shuffled{2, 4, 1, 3};
    CHECK(empirical_rich_fraction(shuffled, 0.5) ==
          empirical_rich_fraction(degrees, 0.5));
}

TEST_CASE("empirical rich fraction input validation") {
    const std::vector<int> degrees{4, 3, 2, 1};
    CHECK_THROWS_AS(empirical_rich_fraction(degrees, 0.0), DomainError);
    CHECK_THROWS_AS(empirical_rich_fraction(degrees, 1.5), DomainError);
    CHECK_THROWS_AS(empirical_rich_fraction(std::vector<int>{}, 0.5), DataError);
    CHECK_THROWS_AS(empirical_rich_fraction(std::vector<int>{0, 0}, 0.5), DataError);
}

TEST_CASE("analysis pipeline produces the comparison rows") {
    const EdgeList edges = synthetic_edges(3000, 13);

    AnalyzeConfig config;
    config.fit.strategy = CutoffStrategy::Fixed;
    config.fit.k_min = 1;
    config.fit.k_max = 1500;
    config.use_n_as_kmax = true;
    const AnalysisResult result = astopo::analyze_edges("synthetic", edges, config);

    CHECK(result.dataset == "synthetic");
    CHECK(result.summary.n > 0);
    CHECK(result.summary.m > 0);
    CHECK(result.summary.avg_degree0 ==
          2.0 * static_cast<double>(result.summary.m) / static_cast<double>(result.summary.n));
    CHECK(result.fit.k_min == 1);
    CHECK(result.fit.k_max == 1500);
    CHECK(std::abs(result.fit.lambda_hat - 2.25) < 0.1);

    const BoundedPowerLaw model(result.fit.lambda_hat, 1, 1500);

    const ReportRow* mean_bounded = find_row(result, "mean_degree", "bounded");
    REQUIRE(mean_bounded != nullptr);
    CHECK(mean_bounded->theoretical == model.mean_degree());
    CHECK(mean_bounded->empirical == result.summary.avg_degree0);
    CHECK(mean_bounded->rel_error ==
          std::abs(mean_bounded->theoretical - mean_bounded->empirical) /
              std::abs(mean_bounded->empirical));

    const ReportRow* mean_subst = find_row(result, "mean_degree", "bounded_n_as_kmax");
    REQUIRE(mean_subst != nullptr);
    const BoundedPowerLaw substituted(result.fit.lambda_hat, 1,
                                      static_cast<int>(result.summary.n));
    CHECK(mean_subst->theoretical == substituted.mean_degree());
    CHECK(mean_subst->note.find("n substituted") != std::string::npos);

    const ReportRow* mean_newman = find_row(result, "mean_degree", "newman");
    REQUIRE(mean_newman != nullptr);
    CHECK(mean_newman->theoretical ==
          astopo::newman_mean_degree(result.fit.lambda_hat, 1));

    const ReportRow* rmin_bounded = find_row(result, "r_kmin", "bounded");
    REQUIRE(rmin_bounded != nullptr);
    CHECK(rmin_bounded->theoretical == astopo::ratio_min_degree(model));
    const double renorm = renormalize_low_degree_ratio(
        astopo::degree_histogram(astopo::degree_sequence(astopo::clean(edges).edges)),
        result.fit.lambda_hat, config.renorm_top_degree);
    CHECK(rmin_bounded->empirical == renorm);
    CHECK(rmin_bounded->note.find("renormalized") != std::string::npos);

    const ReportRow* rmin_xpp = find_row(result, "r_kmin", "xpp");
    REQUIRE(rmin_xpp != nullptr);
    CHECK(rmin_xpp->theoretical == 0.608);
    CHECK(rmin_xpp->empirical == renorm);

    // No node reaches the fixed upper cutoff at this scale, so the empirical
    // share is zero and the relative error undefined.
    const ReportRow* rmax = find_row(result, "r_kmax", "bounded");
    REQUIRE(rmax != nullptr);
    CHECK(rmax->theoretical == astopo::ratio_max_degree(model));
    CHECK(rmax->empirical == 0.0);
    CHECK(std::isnan(rmax->rel_error));
    CHECK(rmax->note.find("empirical value is zero") != std::string::npos);

    const astopo::DegreeSequence seq =
        astopo::degree_sequence(astopo::clean(edges).edges);
    std::vector<int> in_range;
    for (int k : seq.degrees) {
        if (k >= result.fit.k_min && k <= result.fit.k_max) {
            in_range.push_back(k);
        }
    }
    for (double target : {0.20, 0.27}) {
        char label[40];
        std::snprintf(label, sizeof(label), "rich_degrees_top%g", target);
        const ReportRow* bounded = find_row(result, label, "bounded");
        REQUIRE(bounded != nullptr);
        CHECK(bounded->theoretical == astopo::degrees_at_top_fraction(model, target));
        CHECK(bounded->empirical == empirical_rich_fraction(in_range, target));
        const ReportRow* newman = find_row(result, label, "newman");
        REQUIRE(newman != nullptr);
        CHECK(newman->theoretical ==
              astopo::newman_rich_fraction(result.fit.lambda_hat, target));
    }
}

TEST_CASE("analysis skips conditional rows when they do not apply") {
    // Fit window starting above degree 1: no renormalized low-degree rows.
    const EdgeList edges = synthetic_edges(3000, 29);
    AnalyzeConfig config;
    config.fit.strategy = CutoffStrategy::Fixed;
    config.fit.k_min = 2;
    config.fit.k_max = 1500;
    config.use_n_as_kmax = false;
    const AnalysisResult result = astopo::analyze_edges("tail-only", edges, config);
    CHECK(find_row(result, "r_kmin", "bounded") == nullptr);
    CHECK(find_row(result, "r_kmin", "xpp") == nullptr);
    CHECK(find_row(result, "mean_degree", "bounded_n_as_kmax") == nullptr);
    CHECK(find_row(result, "mean_degree", "bounded") != nullptr);
}

TEST_CASE("analysis propagates degenerate-data errors") {
    EdgeList triangle;
    triangle.edges = {astopo::Edge{1, 2}, astopo::Edge{2, 3}, astopo::Edge{3, 1}};
    AnalyzeConfig config;
    // Every node has degree 2: the exponent is unidentifiable.
    CHECK_THROWS_AS(astopo::analyze_edges("triangle", triangle, config), DataError);

    CHECK_THROWS_AS(astopo::analyze_edges("empty", EdgeList{}, config), DataError);
}

TEST_CASE("file analysis names the dataset after the path") {
    const EdgeList edges = synthetic_edges(2000, 37);
    const std::filesystem::path path =
        std::filesystem::temp_directory_path() / "astopo_analyze_case.txt";
    {
        std::ofstream out(path);
        astopo::write_edge_list(out, edges);
    }
    AnalyzeConfig config;
    config.fit.strategy = CutoffStrategy::Fixed;
    config.fit.k_min = 1;
    config.fit.k_max = 1500;

    const AnalysisResult from_file = astopo::analyze_file(path.string(), config);
    const AnalysisResult from_memory = astopo::analyze_edges(path.string(), edges, config);
    CHECK(from_file.dataset == path.string());
    CHECK(from_file.fit.lambda_hat == from_memory.fit.lambda_hat);
    CHECK(from_file.summary.n == from_memory.summary.n);
    CHECK(from_file.report.rows.size() == from_memory.report.rows.size());
    std::filesystem::remove(path);

    CHECK_THROWS_AS(astopo::analyze_file("/nonexistent/astopo-missing.txt", config),
                    DataError);
}

TEST_CASE("csv and json renderings carry the same values") {
    const std::vector<double> targets{0.20};
    const TheoryTable table =
        astopo::theory_table(BoundedPowerLaw(2.25, 1, 1500), targets);

    const nlohmann::json j = astopo::to_json(table);
    CHECK(j["lambda"].get<double>() == table.lambda);
    CHECK(j["k_min"].get<int>() == 1);
    CHECK(j["k_max"].get<int>() == 1500);
    CHECK(j["mean_degree"].get<double>() == table.mean_degree);
    CHECK(j["r_kmin"].get<double>() == table.r_kmin);
    CHECK(j["r_kmax"].get<double>() == table.r_kmax);

    const std::string csv = astopo::to_csv(table);
    CHECK(csv.find("mean_degree") != std::string::npos);
    CHECK(csv.find(astopo::format_sig6(table.mean_degree)) != std::string::npos);
    CHECK(csv.find(astopo::format_sig6(table.r_kmax)) != std::string::npos);
    CHECK(csv.find("rich_degrees_top0.2") != std::string::npos);
}

TEST_CASE("six-significant-digit formatting") {
    CHECK(astopo::format_sig6(2.706904812400565) == "2.7069");
    CHECK(astopo::format_sig6(0.685) == "0.685");
    CHECK(astopo::format_sig6(0.0) == "0");
    CHECK(astopo::format_sig6(4.8910744375048213e-8) == "4.89107e-08");
    CHECK(astopo::format_sig6(-1.5) == "-1.5");
}
