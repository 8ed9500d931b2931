#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "edgemarket/config.hpp"
#include "edgemarket/revenue.hpp"
#include "edgemarket/sweep.hpp"

namespace edgemarket {

/// Output of one single-(N, M) market round.
struct SimulateResult {
    SimConfig config;
    std::vector<SetOutcome> outcomes;
    double total_revenue = 0.0;
};

/// Output of a full server-count sweep: points, fit, and optimum.
struct SweepRunResult {
    SimConfig config;
    std::vector<SweepPoint> points;
    PolynomialFit fit;
    ServerOptimum optimum;
};

// JSON is the canonical format: numbers are emitted with shortest
// round-trip representations, so serialize -> parse is lossless.
nlohmann::json to_json(const SimulateResult& result);
nlohmann::json to_json(const SweepRunResult& result);
SimulateResult simulate_result_from_json(const nlohmann::json& j);
SweepRunResult sweep_result_from_json(const nlohmann::json& j);

// Flat, plot-ready CSV; the resolved config rides along in a leading
// `# config:` comment line.
std::string to_csv(const SimulateResult& result);
std::string to_csv(const SweepRunResult& result);

/// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double value);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

/// Parses a sweep result file (JSON). Throws IoError on missing/corrupt
/// input, ConfigError on schema violations.
SweepRunResult load_sweep_result(const std::string& path);

}  // namespace edgemarket
