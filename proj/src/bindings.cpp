#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <utility>
#include <vector>

#include "astopo/analyze.hpp"
#include "astopo/errors.hpp"
#include "astopo/fit.hpp"
#include "astopo/graph.hpp"
#include "astopo/io.hpp"
#include "astopo/metrics.hpp"
#include "astopo/powerlaw.hpp"
#include "astopo/synth.hpp"

namespace py = pybind11;

namespace {

using NodePair = std::pair<astopo::NodeId, astopo::NodeId>;

astopo::EdgeList to_edge_list(const std::vector<NodePair>& pairs) {
    astopo::EdgeList out;
    out.edges.reserve(pairs.size());
    for (const auto& [u, v] : pairs) {
        out.edges.push_back(astopo::Edge{u, v});
    }
    return out;
}

std::vector<NodePair> from_edge_list(const astopo::EdgeList& edges) {
    std::vector<NodePair> out;
    out.reserve(edges.edges.size());
    for (const astopo::Edge& e : edges.edges) {
        out.emplace_back(e.u, e.v);
    }
    return out;
}

py::dict fit_result_dict(const astopo::FitResult& fit) {
    py::dict out;
    out["lambda_hat"] = fit.lambda_hat;
    out["k_min"] = fit.k_min;
    out["k_max"] = fit.k_max;
    out["n_tail"] = fit.n_tail;
    out["log_likelihood"] = fit.log_likelihood;
    out["ks_stat"] = fit.ks_stat;
    return out;
}

astopo::FitConfig make_fit_config(const std::string& strategy, int k_min, int k_max) {
    astopo::FitConfig config;
    if (strategy == "fixed") {
        config.strategy = astopo::CutoffStrategy::Fixed;
    } else if (strategy == "scan") {
        config.strategy = astopo::CutoffStrategy::Scan;
    } else {
        throw astopo::DomainError("unknown fit strategy: " + strategy);
    }
    config.k_min = k_min;
    config.k_max = k_max;
    return config;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bounded discrete power-law model of scale-free network degrees";

    py::register_exception<astopo::DomainError>(m, "DomainError", PyExc_ValueError);
    auto data_error = py::register_exception<astopo::DataError>(m, "DataError",
                                                                PyExc_RuntimeError);
    py::register_exception<astopo::ParseError>(m, "ParseError", data_error.ptr());

    m.def("truncated_zeta", &astopo::truncated_zeta, py::arg("s"), py::arg("a"),
          py::arg("b"), "Inclusive sum of k^-s for k = a..b");

    py::class_<astopo::BoundedPowerLaw>(m, "BoundedPowerLaw")
        .def(py::init<double, int, int>(), py::arg("lambda_"), py::arg("k_min"),
             py::arg("k_max"))
        .def_property_readonly("lambda_", &astopo::BoundedPowerLaw::lambda)
        .def_property_readonly("k_min", &astopo::BoundedPowerLaw::k_min)
        .def_property_readonly("k_max", &astopo::BoundedPowerLaw::k_max)
        .def_property_readonly("z_norm", &astopo::BoundedPowerLaw::z_norm)
        .def_property_readonly("support_size", &astopo::BoundedPowerLaw::support_size)
        .def("pmf", &astopo::BoundedPowerLaw::pmf, py::arg("k"))
        .def("ccdf", &astopo::BoundedPowerLaw::ccdf, py::arg("k"))
        .def("cdf", &astopo::BoundedPowerLaw::cdf, py::arg("k"))
        .def("quantile", &astopo::BoundedPowerLaw::quantile, py::arg("u"))
        .def("mean_degree", &astopo::BoundedPowerLaw::mean_degree)
        .def("cumulative_table", &astopo::BoundedPowerLaw::cumulative_table)
        .def("__repr__", [](const astopo::BoundedPowerLaw& d) {
            std::ostringstream out;
            out << "BoundedPowerLaw(lambda=" << d.lambda() << ", k_min=" << d.k_min()
                << ", k_max=" << d.k_max() << ")";
            return out.str();
        });

    py::class_<astopo::RichPoint>(m, "RichPoint")
        .def_readonly("threshold_k", &astopo::RichPoint::threshold_k)
        .def_readonly("r_nodes", &astopo::RichPoint::r_nodes)
        .def_readonly("r_degrees", &astopo::RichPoint::r_degrees)
        .def("__repr__", [](const astopo::RichPoint& p) {
            std::ostringstream out;
            out << "RichPoint(threshold_k=" << p.threshold_k << ", r_nodes=" << p.r_nodes
                << ", r_degrees=" << p.r_degrees << ")";
            return out.str();
        });

    m.def("ratio_min_degree", &astopo::ratio_min_degree, py::arg("d"));
    m.def("ratio_max_degree", &astopo::ratio_max_degree, py::arg("d"));
    m.def("rich_fractions", &astopo::rich_fractions, py::arg("d"), py::arg("k"));
    m.def("rich_curve", &astopo::rich_curve, py::arg("d"));
    m.def("degrees_at_top_fraction", &astopo::degrees_at_top_fraction, py::arg("d"),
          py::arg("target_r_nodes"));
    m.def("newman_mean_degree", &astopo::newman_mean_degree, py::arg("lambda_"),
          py::arg("k_min"));
    m.def("newman_rich_fraction", &astopo::newman_rich_fraction, py::arg("lambda_"),
          py::arg("r_nodes"));
    m.def("xpp_min_ratio_reference", &astopo::xpp_min_ratio_reference);

    m.def(
        "sweep",
        [](const std::string& metric, const std::string& vary, double from, double to,
           double step, double lambda, int k_min, int k_max, bool fit_decay) {
            astopo::SweepRequest request;
            request.metric = astopo::sweep_metric_from_string(metric);
            request.varied = astopo::sweep_parameter_from_string(vary);
            request.from = from;
            request.to = to;
            request.step = step;
            request.lambda = lambda;
            request.k_min = k_min;
            request.k_max = k_max;
            request.fit_decay = fit_decay;
            const astopo::SweepTable table = astopo::sweep(request);
            py::dict out;
            out["varied_parameter"] = table.varied_parameter;
            out["metric"] = table.metric;
            py::list rows;
            for (const auto& row : table.rows) {
                rows.append(py::make_tuple(row[0], row[1]));
            }
            out["rows"] = std::move(rows);
            out["decay_exponent"] =
                table.decay_exponent ? py::cast(*table.decay_exponent) : py::none();
            return out;
        },
        py::arg("metric"), py::arg("vary"), py::arg("from_"), py::arg("to"),
        py::arg("step"), py::arg("lambda_") = 2.25, py::arg("k_min") = 1,
        py::arg("k_max") = 1500, py::arg("fit_decay") = false);

    m.def(
        "parse_edge_list",
        [](const std::string& text) {
            std::istringstream in(text);
            return from_edge_list(astopo::parse_edge_list(in));
        },
        py::arg("text"));
    m.def(
        "load_edge_list",
        [](const std::string& path) { return from_edge_list(astopo::load_edge_list(path)); },
        py::arg("path"));
    m.def(
        "clean",
        [](const std::vector<NodePair>& raw) {
            const astopo::CleanResult result = astopo::clean(to_edge_list(raw));
            py::dict out;
            out["edges"] = from_edge_list(result.edges);
            out["self_loops_removed"] = result.stats.self_loops_removed;
            out["duplicates_removed"] = result.stats.duplicates_removed;
            return out;
        },
        py::arg("raw"));
    m.def(
        "degree_sequence",
        [](const std::vector<NodePair>& cleaned) {
            return astopo::degree_sequence(to_edge_list(cleaned)).degrees;
        },
        py::arg("cleaned"));
    m.def(
        "summarize",
        [](const std::vector<int>& degrees, std::int64_t m) {
            const astopo::GraphSummary s =
                astopo::summarize(astopo::DegreeSequence{degrees}, m);
            py::dict out;
            out["n"] = s.n;
            out["m"] = s.m;
            out["k_min0"] = s.k_min0;
            out["k_max0"] = s.k_max0;
            out["avg_degree0"] = s.avg_degree0;
            return out;
        },
        py::arg("degrees"), py::arg("m"));
    m.def(
        "degree_histogram",
        [](const std::vector<int>& degrees) {
            return astopo::degree_histogram(astopo::DegreeSequence{degrees});
        },
        py::arg("degrees"));

    m.def(
        "log_likelihood",
        [](const std::vector<int>& degrees, double lambda, int k_min, int k_max) {
            return astopo::log_likelihood(degrees, lambda, k_min, k_max);
        },
        py::arg("degrees"), py::arg("lambda_"), py::arg("k_min"), py::arg("k_max"));
    m.def(
        "mle_lambda",
        [](const std::vector<int>& degrees, int k_min, int k_max) {
            return astopo::mle_lambda(degrees, k_min, k_max);
        },
        py::arg("degrees"), py::arg("k_min"), py::arg("k_max"));
    m.def(
        "ks_statistic",
        [](const std::vector<int>& degrees, const astopo::BoundedPowerLaw& model) {
            return astopo::ks_statistic(degrees, model);
        },
        py::arg("degrees"), py::arg("model"));
    m.def(
        "fit",
        [](const std::vector<int>& degrees, const std::string& strategy, int k_min,
           int k_max) {
            return fit_result_dict(
                astopo::fit(degrees, make_fit_config(strategy, k_min, k_max)));
        },
        py::arg("degrees"), py::arg("strategy") = "fixed", py::arg("k_min") = 1,
        py::arg("k_max") = 0);

    py::class_<astopo::RandomState>(m, "RandomState")
        .def(py::init<std::uint64_t>(), py::arg("seed"))
        .def_property_readonly("seed", &astopo::RandomState::seed)
        .def("next_uniform", &astopo::RandomState::next_uniform)
        .def("next_below", &astopo::RandomState::next_below, py::arg("n"));

    m.def(
        "sample_degrees",
        [](const astopo::BoundedPowerLaw& d, std::int64_t n, astopo::RandomState& state) {
            return astopo::sample_degrees(d, n, state).degrees;
        },
        py::arg("d"), py::arg("n"), py::arg("state"));
    m.def(
        "configuration_model",
        [](const std::vector<int>& degrees, astopo::RandomState& state, bool simple) {
            const astopo::GenerateResult result =
                astopo::configuration_model(astopo::DegreeSequence{degrees}, state, simple);
            py::dict out;
            out["edges"] = from_edge_list(result.edges);
            out["degree_adjusted"] = result.degree_adjusted;
            out["adjusted_node"] = result.adjusted_node;
            out["rewire_swaps"] = result.rewire_swaps;
            out["residual_self_loops"] = result.residual_self_loops;
            out["residual_duplicates"] = result.residual_duplicates;
            return out;
        },
        py::arg("degrees"), py::arg("state"), py::arg("simple") = true);

    m.def(
        "theory_table",
        [](double lambda, int k_min, int k_max, const std::vector<double>& targets) {
            const astopo::BoundedPowerLaw d(lambda, k_min, k_max);
            const astopo::TheoryTable table = astopo::theory_table(d, targets);
            py::dict out;
            out["lambda"] = table.lambda;
            out["k_min"] = table.k_min;
            out["k_max"] = table.k_max;
            out["mean_degree"] = table.mean_degree;
            out["r_kmin"] = table.r_kmin;
            out["r_kmax"] = table.r_kmax;
            py::list rich;
            for (const auto& [target, r_degrees] : table.rich) {
                rich.append(py::make_tuple(target, r_degrees));
            }
            out["rich"] = std::move(rich);
            return out;
        },
        py::arg("lambda_"), py::arg("k_min"), py::arg("k_max"),
        py::arg("targets") = std::vector<double>{0.20, 0.27});
    m.def("renormalize_low_degree_ratio", &astopo::renormalize_low_degree_ratio,
          py::arg("histogram"), py::arg("lambda_"), py::arg("top_degree"));
    m.def(
        "empirical_rich_fraction",
        [](const std::vector<int>& degrees, double target) {
            return astopo::empirical_rich_fraction(degrees, target);
        },
        py::arg("degrees"), py::arg("target"));
    m.def(
        "analyze_file_json",
        [](const std::string& path, const std::string& strategy, int k_min, int k_max,
           const std::vector<double>& targets, bool use_n_as_kmax, int renorm_top) {
            astopo::AnalyzeConfig config;
            config.fit = make_fit_config(strategy, k_min, k_max);
            config.targets = targets;
            config.use_n_as_kmax = use_n_as_kmax;
            config.renorm_top_degree = renorm_top;
            return astopo::to_json(astopo::analyze_file(path, config)).dump();
        },
        py::arg("path"), py::arg("strategy") = "fixed", py::arg("k_min") = 1,
        py::arg("k_max") = 0, py::arg("targets") = std::vector<double>{0.20, 0.27},
        py::arg("use_n_as_kmax") = false, py::arg("renorm_top") = 3);
}
