#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "astopo/analyze.hpp"
#include "astopo/errors.hpp"
#include "astopo/io.hpp"
#include "astopo/metrics.hpp"
#include "astopo/powerlaw.hpp"
#include "astopo/synth.hpp"

namespace {

using astopo::DataError;
using astopo::DomainError;

// ---- config file: "key = value" lines, '#' comments; values override flags.

std::string trim(const std::string& text) {
    const auto begin = text.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return {};
    }
    const auto end = text.find_last_not_of(" \t\r");
    return text.substr(begin, end - begin + 1);
}

std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open config file: " + path);
    }
    std::map<std::string, std::string> out;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        if (trim(line).empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw DomainError("config " + path + " line " + std::to_string(line_no) +
                              ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw DomainError("config " + path + " line " + std::to_string(line_no) +
                              ": empty key");
        }
        out[key] = value;
    }
    return out;
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double parsed = std::stod(value, &used);
        if (used == value.size()) {
            return parsed;
        }
    } catch (const std::exception&) {
    }
    throw DomainError("config key '" + key + "': expected a number, got '" + value + "'");
}

std::int64_t parse_integer(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const long long parsed = std::stoll(value, &used);
        if (used == value.size()) {
            return parsed;
        }
    } catch (const std::exception&) {
    }
    throw DomainError("config key '" + key + "': expected an integer, got '" + value + "'");
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes" || value == "on") {
        return true;
    }
    if (value == "false" || value == "0" || value == "no" || value == "off") {
        return false;
    }
    throw DomainError("config key '" + key + "': expected a boolean, got '" + value + "'");
}

std::vector<double> parse_target_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    std::istringstream in(value);
    std::string item;
    while (std::getline(in, item, ',')) {
        out.push_back(parse_double(key, trim(item)));
    }
    if (out.empty()) {
        throw DomainError("config key '" + key + "': expected at least one value");
    }
    return out;
}

using Setters = std::map<std::string, std::function<void(const std::string&)>>;

void apply_config(const std::string& path, const Setters& setters) {
    if (path.empty()) {
        return;
    }
    for (const auto& [key, value] : read_config(path)) {
        const auto it = setters.find(key);
        if (it == setters.end()) {
            throw DomainError("config key '" + key + "' is not recognized here");
        }
        it->second(value);
    }
}

// ---- shared option values and helpers

struct OutputOptions {
    std::string format = "csv";
    std::string out;
    std::string config;
};

void add_output_options(CLI::App* cmd, OutputOptions& options) {
    cmd->add_option("--format", options.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", options.out, "Write output to this file instead of stdout");
    cmd->add_option("--config", options.config,
                    "Key = value file whose entries override the flags");
}

void require_format(const std::string& format) {
    if (format != "csv" && format != "json") {
        throw DomainError("format must be csv or json, got '" + format + "'");
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path);
    if (!file) {
        throw DataError("cannot open output file: " + out_path);
    }
    file << text;
    if (!file) {
        throw DataError("failed writing output file: " + out_path);
    }
}

std::string json_text(const nlohmann::json& value) { return value.dump(2) + "\n"; }

astopo::FitConfig make_fit_config(const std::string& strategy, int k_min, int k_max) {
    astopo::FitConfig config;
    if (strategy == "fixed") {
        config.strategy = astopo::CutoffStrategy::Fixed;
    } else if (strategy == "scan") {
        config.strategy = astopo::CutoffStrategy::Scan;
    } else {
        throw DomainError("fit strategy must be fixed or scan, got '" + strategy + "'");
    }
    config.k_min = k_min;
    config.k_max = k_max;
    return config;
}

// ---- theory

struct TheorySettings {
    double lambda = 2.25;
    int k_min = 1;
    int k_max = 1500;
    std::vector<double> targets{0.20, 0.27};
    OutputOptions output;
};

int run_theory(const TheorySettings& s) {
    require_format(s.output.format);
    const astopo::BoundedPowerLaw d(s.lambda, s.k_min, s.k_max);
    const astopo::TheoryTable table = astopo::theory_table(d, s.targets);
    emit(s.output.format == "csv" ? astopo::to_csv(table) : json_text(astopo::to_json(table)),
         s.output.out);
    return 0;
}

// ---- sweep

struct SweepSettings {
    std::string metric;
    std::string vary;
    double from = 0.0;
    double to = 0.0;
    double step = 0.0;
    double lambda = 2.25;
    int k_min = 1;
    int k_max = 1500;
    bool fit_decay = false;
    OutputOptions output;
};

int run_sweep(const SweepSettings& s) {
    require_format(s.output.format);
    astopo::SweepRequest request;
    request.metric = astopo::sweep_metric_from_string(s.metric);
    request.varied = astopo::sweep_parameter_from_string(s.vary);
    request.from = s.from;
    request.to = s.to;
    request.step = s.step;
    request.lambda = s.lambda;
    request.k_min = s.k_min;
    request.k_max = s.k_max;
    request.fit_decay = s.fit_decay;
    const astopo::SweepTable table = astopo::sweep(request);
    emit(s.output.format == "csv" ? astopo::to_csv(table) : json_text(astopo::to_json(table)),
         s.output.out);
    return 0;
}

// ---- analyze / compare / fit

struct AnalyzeSettings {
    std::vector<std::string> paths;
    std::string strategy = "fixed";
    int k_min = 1;
    int k_max = 0;
    std::vector<double> targets{0.20, 0.27};
    bool use_n_as_kmax = false;
    int renorm_top = 3;
    OutputOptions output;
};

std::vector<astopo::AnalysisResult> analyze_all(const AnalyzeSettings& s) {
    astopo::AnalyzeConfig config;
    config.fit = make_fit_config(s.strategy, s.k_min, s.k_max);
    config.targets = s.targets;
    config.use_n_as_kmax = s.use_n_as_kmax;
    config.renorm_top_degree = s.renorm_top;
    std::vector<astopo::AnalysisResult> results;
    results.reserve(s.paths.size());
    for (const std::string& path : s.paths) {
        results.push_back(astopo::analyze_file(path, config));
    }
    return results;
}

int run_analyze(const AnalyzeSettings& s) {
    require_format(s.output.format);
    const std::vector<astopo::AnalysisResult> results = analyze_all(s);
    std::string text;
    if (s.output.format == "csv") {
        text = results.size() == 1 ? astopo::to_csv(results.front()) : astopo::to_csv(results);
    } else {
        text = results.size() == 1 ? json_text(astopo::to_json(results.front()))
                                   : json_text(astopo::to_json(results));
    }
    emit(text, s.output.out);
    return 0;
}

int run_compare(const AnalyzeSettings& s) {
    require_format(s.output.format);
    const std::vector<astopo::AnalysisResult> results = analyze_all(s);
    std::string text;
    if (s.output.format == "csv") {
        std::ostringstream out;
        out << "dataset,metric,method,theoretical,empirical,rel_error,note\n";
        for (const astopo::AnalysisResult& r : results) {
            const std::string block = astopo::to_csv(r);
            // Reuse the report section of the single-result rendering.
            const auto header = block.find("\ndataset,metric,method");
            out << block.substr(header + 1 + std::string("dataset,metric,method,"
                                                         "theoretical,empirical,"
                                                         "rel_error,note\n")
                                                 .size());
        }
        text = out.str();
    } else {
        nlohmann::json all = nlohmann::json::array();
        for (const astopo::AnalysisResult& r : results) {
            nlohmann::json report = nlohmann::json::array();
            for (const astopo::ReportRow& row : r.report.rows) {
                report.push_back(astopo::to_json(row));
            }
            all.push_back({{"dataset", r.dataset}, {"report", std::move(report)}});
        }
        text = json_text(all);
    }
    emit(text, s.output.out);
    return 0;
}

struct FitSettings {
    std::string path;
    std::string strategy = "fixed";
    int k_min = 1;
    int k_max = 0;
    OutputOptions output;
};

int run_fit(const FitSettings& s) {
    require_format(s.output.format);
    const astopo::EdgeList raw = astopo::load_edge_list(s.path);
    const astopo::DegreeSequence seq = astopo::degree_sequence(astopo::clean(raw).edges);
    const astopo::FitResult result =
        astopo::fit(seq.degrees, make_fit_config(s.strategy, s.k_min, s.k_max));
    std::string text;
    if (s.output.format == "csv") {
        std::ostringstream out;
        out << "lambda_hat,k_min,k_max,n_tail,log_likelihood,ks_stat\n"
            << astopo::format_sig6(result.lambda_hat) << ',' << result.k_min << ','
            << result.k_max << ',' << result.n_tail << ','
            << astopo::format_sig6(result.log_likelihood) << ','
            << astopo::format_sig6(result.ks_stat) << '\n';
        text = out.str();
    } else {
        text = json_text(astopo::to_json(result));
    }
    emit(text, s.output.out);
    return 0;
}

// ---- generate

struct GenerateSettings {
    double lambda = 2.25;
    int k_min = 1;
    int k_max = 1500;
    std::int64_t n = 0;
    std::uint64_t seed = 42;
    bool multigraph = false;
    OutputOptions output;
};

int run_generate(const GenerateSettings& s) {
    if (s.n < 1) {
        throw DomainError("--n must be a positive node count");
    }
    const astopo::BoundedPowerLaw d(s.lambda, s.k_min, s.k_max);
    astopo::RandomState state(s.seed);
    const astopo::DegreeSequence seq = astopo::sample_degrees(d, s.n, state);
    const astopo::GenerateResult result =
        astopo::configuration_model(seq, state, !s.multigraph);

    std::ostringstream edges;
    astopo::write_edge_list(edges, result.edges);
    emit(edges.str(), s.output.out);

    // Generation report: stdout when the edge list went to a file, stderr
    // when the edge list itself occupies stdout.
    const std::string report = json_text(astopo::generate_report_json(result));
    if (s.output.out.empty()) {
        std::cerr << report;
    } else {
        std::cout << report;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bounded power-law degree model: theory tables, sweeps, dataset "
                 "analysis, fitting, and synthetic graphs"};
    app.require_subcommand(1);

    TheorySettings theory;
    CLI::App* theory_cmd =
        app.add_subcommand("theory", "Model metrics for one (lambda, kmin, kmax)");
    theory_cmd->add_option("--lambda", theory.lambda, "Power-law exponent")
        ->capture_default_str();
    theory_cmd->add_option("--kmin", theory.k_min, "Smallest degree")->capture_default_str();
    theory_cmd->add_option("--kmax", theory.k_max, "Largest degree")->capture_default_str();
    theory_cmd->add_option("--targets", theory.targets, "Rich-fraction node targets")
        ->delimiter(',');
    add_output_options(theory_cmd, theory.output);

    SweepSettings sweep;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "One metric over a parameter range");
    sweep_cmd
        ->add_option("--metric", sweep.metric,
                     "mean_degree | ratio_min_degree | ratio_max_degree | mean_degree_rate")
        ->required();
    sweep_cmd->add_option("--vary", sweep.vary, "lambda | k_min | k_max")->required();
    sweep_cmd->add_option("--from", sweep.from, "Range start")->required();
    sweep_cmd->add_option("--to", sweep.to, "Range end (inclusive)")->required();
    sweep_cmd->add_option("--step", sweep.step, "Range step")->required();
    sweep_cmd->add_option("--lambda", sweep.lambda, "Fixed exponent")->capture_default_str();
    sweep_cmd->add_option("--kmin", sweep.k_min, "Fixed smallest degree")
        ->capture_default_str();
    sweep_cmd->add_option("--kmax", sweep.k_max, "Fixed largest degree")
        ->capture_default_str();
    sweep_cmd->add_flag("--fit-decay", sweep.fit_decay,
                        "Report the log-log decay exponent of the table");
    add_output_options(sweep_cmd, sweep.output);

    AnalyzeSettings analyze;
    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "Ingest, fit, and compare edge-list files");
    analyze_cmd->add_option("paths", analyze.paths, "Edge-list files")->required();
    analyze_cmd->add_option("--fit-strategy", analyze.strategy, "fixed | scan")
        ->capture_default_str();
    analyze_cmd->add_option("--kmin", analyze.k_min, "Fixed-strategy smallest degree")
        ->capture_default_str();
    analyze_cmd->add_option("--kmax", analyze.k_max,
                            "Fixed-strategy largest degree (0 = observed max)")
        ->capture_default_str();
    analyze_cmd->add_option("--targets", analyze.targets, "Rich-fraction node targets")
        ->delimiter(',');
    analyze_cmd->add_flag("--use-n-as-kmax", analyze.use_n_as_kmax,
                          "Also report the mean degree with n substituted for k_max");
    analyze_cmd->add_option("--renorm-top", analyze.renorm_top,
                            "Low-degree classes pooled by the renormalized ratio")
        ->capture_default_str();
    add_output_options(analyze_cmd, analyze.output);

    AnalyzeSettings compare = analyze;
    CLI::App* compare_cmd =
        app.add_subcommand("compare", "Method-vs-data error table across files");
    compare_cmd->add_option("paths", compare.paths, "Edge-list files")->required();
    compare_cmd->add_option("--fit-strategy", compare.strategy, "fixed | scan")
        ->capture_default_str();
    compare_cmd->add_option("--kmin", compare.k_min, "Fixed-strategy smallest degree")
        ->capture_default_str();
    compare_cmd->add_option("--kmax", compare.k_max,
                            "Fixed-strategy largest degree (0 = observed max)")
        ->capture_default_str();
    compare_cmd->add_option("--targets", compare.targets, "Rich-fraction node targets")
        ->delimiter(',');
    compare_cmd->add_flag("--use-n-as-kmax", compare.use_n_as_kmax,
                          "Also report the mean degree with n substituted for k_max");
    compare_cmd->add_option("--renorm-top", compare.renorm_top,
                            "Low-degree classes pooled by the renormalized ratio")
        ->capture_default_str();
    add_output_options(compare_cmd, compare.output);

    FitSettings fit;
    CLI::App* fit_cmd = app.add_subcommand("fit", "Exponent fit for one edge-list file");
    fit_cmd->add_option("path", fit.path, "Edge-list file")->required();
    fit_cmd->add_option("--fit-strategy", fit.strategy, "fixed | scan")
        ->capture_default_str();
    fit_cmd->add_option("--kmin", fit.k_min, "Fixed-strategy smallest degree")
        ->capture_default_str();
    fit_cmd->add_option("--kmax", fit.k_max,
                        "Fixed-strategy largest degree (0 = observed max)")
        ->capture_default_str();
    add_output_options(fit_cmd, fit.output);

    GenerateSettings generate;
    CLI::App* generate_cmd =
        app.add_subcommand("generate", "Synthetic graph from sampled degrees");
    generate_cmd->add_option("--lambda", generate.lambda, "Power-law exponent")
        ->capture_default_str();
    generate_cmd->add_option("--kmin", generate.k_min, "Smallest degree")
        ->capture_default_str();
    generate_cmd->add_option("--kmax", generate.k_max, "Largest degree")
        ->capture_default_str();
    generate_cmd->add_option("--n", generate.n, "Node count")->required();
    generate_cmd->add_option("--seed", generate.seed, "Random seed")->capture_default_str();
    generate_cmd->add_flag("--multigraph", generate.multigraph,
                           "Keep self-loops and duplicate edges (skip rewiring)");
    add_output_options(generate_cmd, generate.output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help and friends
        }
        app.exit(e);
        return 1;
    }

    try {
        if (theory_cmd->parsed()) {
            apply_config(theory.output.config,
                         {{"lambda", [&](const std::string& v) {
                               theory.lambda = parse_double("lambda", v);
                           }},
                          {"kmin", [&](const std::string& v) {
                               theory.k_min = static_cast<int>(parse_integer("kmin", v));
                           }},
                          {"kmax", [&](const std::string& v) {
                               theory.k_max = static_cast<int>(parse_integer("kmax", v));
                           }},
                          {"targets", [&](const std::string& v) {
                               theory.targets = parse_target_list("targets", v);
                           }},
                          {"format", [&](const std::string& v) { theory.output.format = v; }},
                          {"out", [&](const std::string& v) { theory.output.out = v; }}});
            return run_theory(theory);
        }
        if (sweep_cmd->parsed()) {
            apply_config(sweep.output.config,
                         {{"metric", [&](const std::string& v) { sweep.metric = v; }},
                          {"vary", [&](const std::string& v) { sweep.vary = v; }},
                          {"from", [&](const std::string& v) {
                               sweep.from = parse_double("from", v);
                           }},
                          {"to", [&](const std::string& v) { sweep.to = parse_double("to", v); }},
                          {"step", [&](const std::string& v) {
                               sweep.step = parse_double("step", v);
                           }},
                          {"lambda", [&](const std::string& v) {
                               sweep.lambda = parse_double("lambda", v);
                           }},
                          {"kmin", [&](const std::string& v) {
                               sweep.k_min = static_cast<int>(parse_integer("kmin", v));
                           }},
                          {"kmax", [&](const std::string& v) {
                               sweep.k_max = static_cast<int>(parse_integer("kmax", v));
                           }},
                          {"fit-decay", [&](const std::string& v) {
                               sweep.fit_decay = parse_bool("fit-decay", v);
                           }},
                          {"format", [&](const std::string& v) { sweep.output.format = v; }},
                          {"out", [&](const std::string& v) { sweep.output.out = v; }}});
            return run_sweep(sweep);
        }
        const auto analyze_setters = [](AnalyzeSettings& s) {
            return Setters{
                {"fit-strategy", [&s](const std::string& v) { s.strategy = v; }},
                {"kmin", [&s](const std::string& v) {
                     s.k_min = static_cast<int>(parse_integer("kmin", v));
                 }},
                {"kmax", [&s](const std::string& v) {
                     s.k_max = static_cast<int>(parse_integer("kmax", v));
                 }},
                {"targets", [&s](const std::string& v) {
                     s.targets = parse_target_list("targets", v);
                 }},
                {"use-n-as-kmax", [&s](const std::string& v) {
                     s.use_n_as_kmax = parse_bool("use-n-as-kmax", v);
                 }},
                {"renorm-top", [&s](const std::string& v) {
                     s.renorm_top = static_cast<int>(parse_integer("renorm-top", v));
                 }},
                {"format", [&s](const std::string& v) { s.output.format = v; }},
                {"out", [&s](const std::string& v) { s.output.out = v; }}};
        };
        if (analyze_cmd->parsed()) {
            apply_config(analyze.output.config, analyze_setters(analyze));
            return run_analyze(analyze);
        }
        if (compare_cmd->parsed()) {
            apply_config(compare.output.config, analyze_setters(compare));
            return run_compare(compare);
        }
        if (fit_cmd->parsed()) {
            apply_config(fit.output.config,
                         {{"fit-strategy", [&](const std::string& v) { fit.strategy = v; }},
                          {"kmin", [&](const std::string& v) {
                               fit.k_min = static_cast<int>(parse_integer("kmin", v));
                           }},
                          {"kmax", [&](const std::string& v) {
                               fit.k_max = static_cast<int>(parse_integer("kmax", v));
                           }},
                          {"format", [&](const std::string& v) { fit.output.format = v; }},
                          {"out", [&](const std::string& v) { fit.output.out = v; }}});
            return run_fit(fit);
        }
        if (generate_cmd->parsed()) {
            apply_config(generate.output.config,
                         {{"lambda", [&](const std::string& v) {
                               generate.lambda = parse_double("lambda", v);
                           }},
                          {"kmin", [&](const std::string& v) {
                               generate.k_min = static_cast<int>(parse_integer("kmin", v));
                           }},
                          {"kmax", [&](const std::string& v) {
                               generate.k_max = static_cast<int>(parse_integer("kmax", v));
                           }},
                          {"n", [&](const std::string& v) {
                               generate.n = parse_integer("n", v);
                           }},
                          {"seed", [&](const std::string& v) {
                               generate.seed =
                                   static_cast<std::uint64_t>(parse_integer("seed", v));
                           }},
                          {"multigraph", [&](const std::string& v) {
                               generate.multigraph = parse_bool("multigraph", v);
                           }},
                          {"out", [&](const std::string& v) { generate.output.out = v; }}});
            return run_generate(generate);
        }
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
