#include "edgemarket/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "edgemarket/errors.hpp"

namespace edgemarket {

using nlohmann::json;

SweepSettings::SweepSettings() {
    for (int i = 1; i <= 19; ++i) ratio_grid.push_back(0.05 * i);
}

const char* to_string(OutputFormat format) {
    return format == OutputFormat::Csv ? "csv" : "json";
}

OutputFormat output_format_from_string(const std::string& name) {
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    throw ConfigError("output.format: unknown format '" + name + "' (expected csv or json)");
}

void SimConfig::validate() const {
    population.validate();
    if (economics.fixed_cost < 0.0) {
        throw ConfigError("economics.fixed_cost: must be non-negative, got " +
                          std::to_string(economics.fixed_cost));
    }
    if (economics.q_cap_kb != population.q_cap_kb) {
        throw ConfigError("economics.q_cap must match population.q_cap");
    }
    if (sweep.trials < 1) {
        throw ConfigError("sweep.trials: must be at least 1, got " +
                          std::to_string(sweep.trials));
    }
    if (sweep.fit_degree < 2) {
        throw ConfigError("sweep.fit_degree: must be at least 2, got " +
                          std::to_string(sweep.fit_degree));
    }
    for (int m : sweep.m_grid) {
        if (m < 1) {
            throw ConfigError("sweep.m_grid: server counts must be at least 1");
        }
        if (static_cast<std::size_t>(m) > population.n_users) {
            throw ConfigError("sweep.m_grid: server count " + std::to_string(m) +
                              " exceeds n_users " + std::to_string(population.n_users));
        }
    }
    for (double r : sweep.ratio_grid) {
        if (!(r > 0.0) || r > 1.0) {
            throw ConfigError("sweep.ratio_grid: ratios must lie in (0, 1]");
        }
    }
    if (servers < 1) {
        throw ConfigError("allocation.servers: must be at least 1");
    }
}

std::vector<int> SimConfig::resolved_m_grid() const {
    if (!sweep.m_grid.empty()) return sweep.m_grid;
    std::vector<int> grid;
    for (double r : sweep.ratio_grid) {
        // The epsilon keeps ratios that are integer multiples of 1/N (up to
        // representation error, e.g. 0.95 * 1000) from ceiling one too high.
        const int m = static_cast<int>(
            std::ceil(r * static_cast<double>(population.n_users) - 1e-9));
        grid.push_back(std::max(m, 1));
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

json SimConfig::to_json() const {
    json j;
    j["population"] = {
        {"n_users", population.n_users},
        {"q_range_kb", {population.q_min_kb, population.q_max_kb}},
        {"q_cap_kb", population.q_cap_kb},
        {"capacity_choices_mhz", population.capacity_choices_mhz},
        {"capacity_weights", population.capacity_weights},
        {"k", population.k},
    };
    j["economics"] = {{"fixed_cost", economics.fixed_cost}};
    j["allocation"] = {
        {"strategy", to_string(allocation_strategy)},
        {"servers", servers},
    };
    j["singleton_policy"] = to_string(singleton_policy);
    j["sweep"] = {
        {"m_grid", resolved_m_grid()},
        {"trials", sweep.trials},
        {"fit_degree", sweep.fit_degree},
        {"fixed_population", sweep.fixed_population},
    };
    j["master_seed"] = master_seed;
    j["output"] = {
        {"path", output.path},
        {"format", to_string(output.format)},
    };
    return j;
}

namespace {

// Reads obj[key] into dst when present; type errors surface as ConfigError
// naming the field.
template <typename T>
void read_field(const json& obj, const char* section, const char* key, T& dst) {
    if (!obj.contains(key)) return;
    try {
        dst = obj.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string(section) + "." + key + ": " + e.what());
    }
}

void check_known_keys(const json& obj, const char* section,
                      std::initializer_list<const char*> known) {
    if (!obj.is_object()) {
        throw ConfigError(std::string(section) + ": expected an object");
    }
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (std::find_if(known.begin(), known.end(),
                         [&](const char* k) { return key == k; }) == known.end()) {
            throw ConfigError(std::string(section) + "." + key + ": unknown field");
        }
    }
}

}  // namespace

SimConfig SimConfig::from_json(const json& j) {
    SimConfig cfg;
    check_known_keys(j, "config",
                     {"population", "economics", "allocation", "singleton_policy", "sweep",
                      "master_seed", "output"});

    if (j.contains("population")) {
        const auto& p = j.at("population");
        check_known_keys(p, "population",
                         {"n_users", "q_range_kb", "q_cap_kb", "capacity_choices_mhz",
                          "capacity_weights", "k"});
        read_field(p, "population", "n_users", cfg.population.n_users);
        if (p.contains("q_range_kb")) {
            std::vector<double> range;
            read_field(p, "population", "q_range_kb", range);
            if (range.size() != 2) {
                throw ConfigError("population.q_range_kb: expected [q_min, q_max]");
            }
            cfg.population.q_min_kb = range[0];
            cfg.population.q_max_kb = range[1];
        }
        read_field(p, "population", "q_cap_kb", cfg.population.q_cap_kb);
        read_field(p, "population", "capacity_choices_mhz", cfg.population.capacity_choices_mhz);
        read_field(p, "population", "capacity_weights", cfg.population.capacity_weights);
        read_field(p, "population", "k", cfg.population.k);
    }
    cfg.economics.q_cap_kb = cfg.population.q_cap_kb;

    if (j.contains("economics")) {
        const auto& e = j.at("economics");
        check_known_keys(e, "economics", {"fixed_cost"});
        read_field(e, "economics", "fixed_cost", cfg.economics.fixed_cost);
    }

    if (j.contains("allocation")) {
        const auto& a = j.at("allocation");
        check_known_keys(a, "allocation", {"strategy", "servers"});
        std::string strategy = to_string(cfg.allocation_strategy);
        read_field(a, "allocation", "strategy", strategy);
        cfg.allocation_strategy = allocation_strategy_from_string(strategy);
        read_field(a, "allocation", "servers", cfg.servers);
    }

    if (j.contains("singleton_policy")) {
        std::string policy;
        read_field(j, "config", "singleton_policy", policy);
        cfg.singleton_policy = singleton_policy_from_string(policy);
    }

    if (j.contains("sweep")) {
        const auto& s = j.at("sweep");
        check_known_keys(s, "sweep",
                         {"m_grid", "ratio_grid", "trials", "fit_degree", "fixed_population"});
        if (s.contains("m_grid") && s.contains("ratio_grid")) {
            throw ConfigError("sweep: specify either m_grid or ratio_grid, not both");
        }
        if (s.contains("m_grid")) {
            read_field(s, "sweep", "m_grid", cfg.sweep.m_grid);
            if (cfg.sweep.m_grid.empty()) {
                throw ConfigError("sweep.m_grid: must not be empty");
            }
            cfg.sweep.ratio_grid.clear();
        }
        if (s.contains("ratio_grid")) {
            read_field(s, "sweep", "ratio_grid", cfg.sweep.ratio_grid);
            if (cfg.sweep.ratio_grid.empty()) {
                throw ConfigError("sweep.ratio_grid: must not be empty");
            }
        }
        read_field(s, "sweep", "trials", cfg.sweep.trials);
        read_field(s, "sweep", "fit_degree", cfg.sweep.fit_degree);
        read_field(s, "sweep", "fixed_population", cfg.sweep.fixed_population);
    }

    read_field(j, "config", "master_seed", cfg.master_seed);

    if (j.contains("output")) {
        const auto& o = j.at("output");
        check_known_keys(o, "output", {"path", "format"});
        read_field(o, "output", "path", cfg.output.path);
        std::string format = to_string(cfg.output.format);
        read_field(o, "output", "format", format);
        cfg.output.format = output_format_from_string(format);
    }

    cfg.validate();
    return cfg;
}

SimConfig SimConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file: " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    json j;
    try {
        j = json::parse(buffer.str());
    } catch (const json::parse_error& e) {
        throw ConfigError("config parse error in " + path + ": " + e.what());
    }
    return from_json(j);
}

}  // namespace edgemarket
