#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "astopo/analyze.hpp"
#include "astopo/fit.hpp"
#include "astopo/graph.hpp"
#include "astopo/metrics.hpp"
#include "astopo/synth.hpp"

namespace astopo {

/// CSV numbers carry 6 significant digits; JSON keeps full precision.
std::string format_sig6(double value);

// JSON builders (full precision via nlohmann's round-trip formatting).
nlohmann::json to_json(const GraphSummary& summary);
nlohmann::json to_json(const CleanStats& stats);
nlohmann::json to_json(const FitResult& fit);
nlohmann::json to_json(const ReportRow& row);
nlohmann::json to_json(const TheoryTable& table);
nlohmann::json to_json(const SweepTable& table);
nlohmann::json to_json(const std::vector<RichPoint>& curve);
nlohmann::json to_json(const AnalysisResult& result);
nlohmann::json to_json(const std::vector<AnalysisResult>& results);
nlohmann::json generate_report_json(const GenerateResult& result);

// CSV renderings of the same values.
std::string to_csv(const TheoryTable& table);
std::string to_csv(const SweepTable& table);
std::string to_csv(const std::vector<RichPoint>& curve);
std::string to_csv(const AnalysisResult& result);
std::string to_csv(const std::vector<AnalysisResult>& results);

}  // namespace astopo
