#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "edgemarket/allocation.hpp"
#include "edgemarket/auction.hpp"
#include "edgemarket/population.hpp"
#include "edgemarket/revenue.hpp"

namespace edgemarket {

struct SweepSettings {
    std::vector<int> m_grid;         // explicit server counts; empty = derive from ratio_grid
    std::vector<double> ratio_grid;  // defaults to 0.05, 0.10, ..., 0.95
    int trials = 50;
    int fit_degree = 6;
    bool fixed_population = false;   // reuse the trial population across grid cells

    SweepSettings();
};

enum class OutputFormat { Json, Csv };

const char* to_string(OutputFormat format);
OutputFormat output_format_from_string(const std::string& name);

struct OutputSettings {
    std::string path = "result.json";
    OutputFormat format = OutputFormat::Json;
};

/// Complete experiment description: population, economics, policies,
/// sweep settings, and the master seed every substream derives from.
struct SimConfig {
    PopulationConfig population;
    EconomicParams economics;
    AllocationStrategy allocation_strategy = AllocationStrategy::Balanced;
    SingletonPolicy singleton_policy = SingletonPolicy::Midpoint;
    SweepSettings sweep;
    std::uint64_t master_seed = 42;
    std::size_t servers = 25;  // server count for single-run simulation
    OutputSettings output;

    void validate() const;

    /// The sweep grid with ratios resolved against n_users, deduplicated,
    /// ascending.
    std::vector<int> resolved_m_grid() const;

    /// Fully resolved config (defaults applied, grid materialized); the echo
    /// embedded in every result file.
    nlohmann::json to_json() const;

    static SimConfig from_json(const nlohmann::json& j);
    static SimConfig load(const std::string& path);
};

}  // namespace edgemarket
