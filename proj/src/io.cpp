#include "astopo/io.hpp"

#include <cstdio>
#include <sstream>

namespace astopo {

std::string format_sig6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

nlohmann::json to_json(const GraphSummary& summary) {
    return {{"n", summary.n},
            {"m", summary.m},
            {"k_min0", summary.k_min0},
            {"k_max0", summary.k_max0},
            {"avg_degree0", summary.avg_degree0}};
}

nlohmann::json to_json(const CleanStats& stats) {
    return {{"self_loops_removed", stats.self_loops_removed},
            {"duplicates_removed", stats.duplicates_removed}};
}

nlohmann::json to_json(const FitResult& fit) {
    return {{"lambda_hat", fit.lambda_hat}, {"k_min", fit.k_min},
            {"k_max", fit.k_max},           {"n_tail", fit.n_tail},
            {"log_likelihood", fit.log_likelihood},
            {"ks_stat", fit.ks_stat}};
}

nlohmann::json to_json(const ReportRow& row) {
    return {{"metric", row.metric},
            {"method", row.method},
            {"theoretical", row.theoretical},
            {"empirical", row.empirical},
            {"rel_error", row.rel_error},
            {"note", row.note}};
}

nlohmann::json to_json(const TheoryTable& table) {
    nlohmann::json rich = nlohmann::json::array();
    for (const auto& [target, r_degrees] : table.rich) {
        rich.push_back({{"target", target}, {"r_degrees", r_degrees}});
    }
    return {{"lambda", table.lambda},
            {"k_min", table.k_min},
            {"k_max", table.k_max},
            {"mean_degree", table.mean_degree},
            {"r_kmin", table.r_kmin},
            {"r_kmax", table.r_kmax},
            {"rich", std::move(rich)}};
}

nlohmann::json to_json(const SweepTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        rows.push_back({row[0], row[1]});
    }
    nlohmann::json out{{"varied_parameter", table.varied_parameter},
                       {"metric", table.metric},
                       {"rows", std::move(rows)}};
    if (table.decay_exponent) {
        out["decay_exponent"] = *table.decay_exponent;
    } else {
        out["decay_exponent"] = nullptr;
    }
    return out;
}

nlohmann::json to_json(const std::vector<RichPoint>& curve) {
    nlohmann::json out = nlohmann::json::array();
    for (const RichPoint& point : curve) {
        out.push_back({{"threshold_k", point.threshold_k},
                       {"r_nodes", point.r_nodes},
                       {"r_degrees", point.r_degrees}});
    }
    return out;
}

nlohmann::json to_json(const AnalysisResult& result) {
    nlohmann::json report = nlohmann::json::array();
    for (const ReportRow& row : result.report.rows) {
        report.push_back(to_json(row));
    }
    return {{"dataset", result.dataset},
            {"summary", to_json(result.summary)},
            {"clean_stats", to_json(result.clean_stats)},
            {"fit", to_json(result.fit)},
            {"report", std::move(report)}};
}

nlohmann::json to_json(const std::vector<AnalysisResult>& results) {
    nlohmann::json out = nlohmann::json::array();
    for (const AnalysisResult& result : results) {
        out.push_back(to_json(result));
    }
    return out;
}

nlohmann::json generate_report_json(const GenerateResult& result) {
    return {{"edges", static_cast<std::int64_t>(result.edges.edges.size())},
            {"degree_adjusted", result.degree_adjusted},
            {"adjusted_node", result.adjusted_node},
            {"rewire_swaps", result.rewire_swaps},
            {"residual_self_loops", result.residual_self_loops},
            {"residual_duplicates", result.residual_duplicates}};
}

std::string to_csv(const TheoryTable& table) {
    std::ostringstream head;
    std::ostringstream body;
    head << "lambda,k_min,k_max,mean_degree,r_kmin,r_kmax";
    body << format_sig6(table.lambda) << ',' << table.k_min << ',' << table.k_max
         << ',' << format_sig6(table.mean_degree) << ',' << format_sig6(table.r_kmin)
         << ',' << format_sig6(table.r_kmax);
    for (const auto& [target, r_degrees] : table.rich) {
        head << ",rich_degrees_top" << format_sig6(target);
        body << ',' << format_sig6(r_degrees);
    }
    return head.str() + "\n" + body.str() + "\n";
}

std::string to_csv(const SweepTable& table) {
    std::ostringstream out;
    if (table.decay_exponent) {
        out << "# decay_exponent = " << format_sig6(*table.decay_exponent) << '\n';
    }
    out << table.varied_parameter << ',' << table.metric << '\n';
    for (const auto& row : table.rows) {
        out << format_sig6(row[0]) << ',' << format_sig6(row[1]) << '\n';
    }
    return out.str();
}

std::string to_csv(const std::vector<RichPoint>& curve) {
    std::ostringstream out;
    out << "threshold_k,r_nodes,r_degrees\n";
    for (const RichPoint& point : curve) {
        out << point.threshold_k << ',' << format_sig6(point.r_nodes) << ','
            << format_sig6(point.r_degrees) << '\n';
    }
    return out.str();
}

std::string to_csv(const std::vector<AnalysisResult>& results) {
    std::ostringstream out;
    out << "dataset,n,m,k_min0,k_max0,avg_degree0,self_loops_removed,"
           "duplicates_removed,lambda_hat,fit_k_min,fit_k_max,n_tail,"
           "log_likelihood,ks_stat\n";
    for (const AnalysisResult& r : results) {
        out << csv_escape(r.dataset) << ',' << r.summary.n << ',' << r.summary.m << ','
            << r.summary.k_min0 << ',' << r.summary.k_max0 << ','
            << format_sig6(r.summary.avg_degree0) << ','
            << r.clean_stats.self_loops_removed << ','
            << r.clean_stats.duplicates_removed << ','
            << format_sig6(r.fit.lambda_hat) << ',' << r.fit.k_min << ','
            << r.fit.k_max << ',' << r.fit.n_tail << ','
            << format_sig6(r.fit.log_likelihood) << ','
            << format_sig6(r.fit.ks_stat) << '\n';
    }
    out << "\ndataset,metric,method,theoretical,empirical,rel_error,note\n";
    for (const AnalysisResult& r : results) {
        for (const ReportRow& row : r.report.rows) {
            out << csv_escape(r.dataset) << ',' << csv_escape(row.metric) << ','
                << csv_escape(row.method) << ',' << format_sig6(row.theoretical) << ','
                << format_sig6(row.empirical) << ',' << format_sig6(row.rel_error)
                << ',' << csv_escape(row.note) << '\n';
        }
    }
    return out.str();
}

std::string to_csv(const AnalysisResult& result) {
    return to_csv(std::vector<AnalysisResult>{result});
}

}  // namespace astopo
