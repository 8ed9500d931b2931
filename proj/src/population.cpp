#include "edgemarket/population.hpp"

#include <numeric>
#include <string>

#include "edgemarket/auction.hpp"
#include "edgemarket/errors.hpp"
#include "edgemarket/rng.hpp"

namespace edgemarket {

void PopulationConfig::validate() const {
    if (!(q_min_kb > 0.0)) {
        throw ConfigError("population.q_range: q_min must be positive, got " +
                          std::to_string(q_min_kb));
    }
    if (q_min_kb > q_max_kb) {
        throw ConfigError("population.q_range: inverted range [" + std::to_string(q_min_kb) +
                          ", " + std::to_string(q_max_kb) + "]");
    }
    if (q_max_kb > q_cap_kb) {
        throw ConfigError("population.q_range: q_max " + std::to_string(q_max_kb) +
                          " exceeds q_cap " + std::to_string(q_cap_kb) +
                          " (valuation would exceed ability)");
    }
    if (capacity_choices_mhz.empty()) {
        throw ConfigError("population.capacity_choices: must not be empty");
    }
    for (double c : capacity_choices_mhz) {
        if (!(c > 1.0)) {
            throw ConfigError("population.capacity_choices: every choice must exceed 1 MHz, got " +
                              std::to_string(c));
        }
    }
    if (!capacity_weights.empty()) {
        if (capacity_weights.size() != capacity_choices_mhz.size()) {
            throw ConfigError("population.capacity_weights: expected " +
                              std::to_string(capacity_choices_mhz.size()) + " weights, got " +
                              std::to_string(capacity_weights.size()));
        }
        double total = 0.0;
        for (double w : capacity_weights) {
            if (w < 0.0) {
                throw ConfigError("population.capacity_weights: weights must be non-negative");
            }
            total += w;
        }
        if (!(total > 0.0)) {
            throw ConfigError("population.capacity_weights: weights must not all be zero");
        }
    }
    if (!(k > 0.0)) {
        throw ConfigError("population.k: must be positive, got " + std::to_string(k));
    }
}

double sample_offload_amount(std::mt19937_64& eng, double q_min_kb, double q_max_kb) {
    if (q_min_kb > q_max_kb) {
        throw ConfigError("sample_offload_amount: inverted range [" + std::to_string(q_min_kb) +
                          ", " + std::to_string(q_max_kb) + "]");
    }
    return rng::uniform(eng, q_min_kb, q_max_kb);
}

double sample_capacity(std::mt19937_64& eng, std::span<const double> choices,
                       std::span<const double> weights) {
    if (choices.empty()) {
        throw ConfigError("sample_capacity: empty choice set");
    }
    if (weights.empty()) {
        return choices[rng::below(eng, choices.size())];
    }
    if (weights.size() != choices.size()) {
        throw ConfigError("sample_capacity: weight/choice size mismatch");
    }
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (!(total > 0.0)) {
        throw ConfigError("sample_capacity: weights must have a positive sum");
    }
    const double u = rng::uniform01(eng) * total;
    double cumulative = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < choices.size(); ++i) {
        if (weights[i] > 0.0) last_positive = i;
        cumulative += weights[i];
        if (u < cumulative) return choices[i];
    }
    // u rounded up onto the total; fall back to the last selectable choice
    return choices[last_positive];
}

std::vector<EndUser> generate_population(const PopulationConfig& config, std::uint64_t seed) {
    config.validate();
    auto eng = rng::make_engine(seed);
    std::vector<EndUser> users;
    users.reserve(config.n_users);
    for (std::size_t i = 0; i < config.n_users; ++i) {
        EndUser user;
        user.id = static_cast<std::uint32_t>(i);
        user.q_kb = sample_offload_amount(eng, config.q_min_kb, config.q_max_kb);
        user.f_t_mhz = sample_capacity(eng, config.capacity_choices_mhz, config.capacity_weights);
        user.ability = valuation_ability(user.f_t_mhz, config.k);
        user.valuation = valuation(user.ability, user.q_kb, config.q_cap_kb);
        users.push_back(user);
    }
    return users;
}

}  // namespace edgemarket
