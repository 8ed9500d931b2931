#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace edgemarket {

/// One bidder in the market.
struct EndUser {
    std::uint32_t id = 0;
    double q_kb = 0.0;      // offload amount
    double f_t_mhz = 0.0;   // compute capacity
    double ability = 0.0;   // A = k * log10(f_t)
    double valuation = 0.0; // v = A * sqrt(q / Q), always in [0, A]
};

struct PopulationConfig {
    std::size_t n_users = 100;
    double q_min_kb = 100.0;
    double q_max_kb = 500.0;
    double q_cap_kb = 500.0;
    std::vector<double> capacity_choices_mhz = {10.0, 100.0, 1000.0};
    std::vector<double> capacity_weights;  // empty = uniform; else one weight per choice
    double k = 10.0;

    /// Throws ConfigError naming the violated field.
    void validate() const;
};

/// Draws n_users independent users; same (config, seed) always yields an
/// identical list.
std::vector<EndUser> generate_population(const PopulationConfig& config, std::uint64_t seed);

double sample_offload_amount(std::mt19937_64& eng, double q_min_kb, double q_max_kb);

/// Weighted categorical draw over the capacity choices. Weights may be empty
/// (uniform); otherwise they must be non-negative with a positive sum.
double sample_capacity(std::mt19937_64& eng, std::span<const double> choices,
                       std::span<const double> weights);

}  // namespace edgemarket
