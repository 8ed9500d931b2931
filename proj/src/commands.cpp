#include "edgemarket/commands.hpp"

#include <functional>

#include "edgemarket/config.hpp"
#include "edgemarket/errors.hpp"
#include "edgemarket/results.hpp"
#include "edgemarket/revenue.hpp"
#include "edgemarket/rng.hpp"
#include "edgemarket/sweep.hpp"

namespace edgemarket {

namespace {

int run_guarded(std::ostream& err, const std::function<void()>& body) {
    try {
        body();
        return kExitOk;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const NumericalError& e) {
        err << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}

SimConfig resolve_config(const CommandOverrides& overrides) {
    SimConfig config;
    if (overrides.config_path) {
        config = SimConfig::load(*overrides.config_path);
    }
    if (overrides.seed) config.master_seed = *overrides.seed;
    if (overrides.trials) config.sweep.trials = *overrides.trials;
    if (overrides.users) config.population.n_users = *overrides.users;
    if (overrides.servers) config.servers = *overrides.servers;
    if (overrides.output_path) config.output.path = *overrides.output_path;
    if (overrides.format) config.output.format = output_format_from_string(*overrides.format);
    if (overrides.fit_degree) config.sweep.fit_degree = *overrides.fit_degree;
    config.validate();
    return config;
}

void write_result(const SimConfig& config, const nlohmann::json& as_json,
                  const std::string& as_csv) {
    if (config.output.format == OutputFormat::Json) {
        write_text_file(config.output.path, as_json.dump(2) + "\n");
    } else {
        write_text_file(config.output.path, as_csv);
    }
}

}  // namespace

int cmd_simulate(const CommandOverrides& overrides, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&] {
        const SimConfig config = resolve_config(overrides);

        const auto population = generate_population(
            config.population,
            rng::substream_seed(config.master_seed, rng::Stream::Population, 0));
        const auto allocation =
            allocate(config.allocation_strategy, config.population.n_users, config.servers,
                     rng::substream_seed(config.master_seed, rng::Stream::Allocation, 0));

        SimulateResult result;
        result.config = config;
        auto [outcomes, total] =
            simulate_once(population, allocation, config.economics, config.singleton_policy);
        result.outcomes = std::move(outcomes);
        result.total_revenue = total;

        write_result(config, to_json(result), to_csv(result));
        out << "W = " << format_double(result.total_revenue) << "\n";
    });
}

int cmd_sweep(const CommandOverrides& overrides, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&] {
        const SimConfig config = resolve_config(overrides);
        const auto grid = config.resolved_m_grid();

        SweepRunResult result;
        result.config = config;
        result.points = sweep_servers(config, grid, config.sweep.trials, config.master_seed);
        result.fit = fit_revenue_curve(result.points, config.sweep.fit_degree);
        result.optimum =
            optimal_server_count(result.fit, grid.front(), grid.back(),
                                 config.population.n_users);

        write_result(config, to_json(result), to_csv(result));
        if (result.optimum.endpoint) {
            err << "warning: fitted maximum lies on the grid boundary at M = "
                << result.optimum.servers << "; widen the sweep grid\n";
        }
        out << "M* = " << result.optimum.servers
            << "  ratio = " << format_double(result.optimum.ratio) << "\n";
    });
}

int cmd_report(const std::string& result_path, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&] {
        const SweepRunResult result = load_sweep_result(result_path);
        if (result.points.empty()) {
            throw ConfigError("report: result file has no sweep points");
        }

        out << "m,mean_revenue\n";
        for (const auto& p : result.points) {
            out << p.servers << "," << format_double(p.mean_revenue) << "\n";
        }

        double m_lo = result.points.front().servers;
        double m_hi = result.points.front().servers;
        for (const auto& p : result.points) {
            m_lo = std::min(m_lo, static_cast<double>(p.servers));
            m_hi = std::max(m_hi, static_cast<double>(p.servers));
        }

        constexpr int kCurveSamples = 200;
        out << "m,fitted_revenue\n";
        for (int i = 0; i < kCurveSamples; ++i) {
            const double m = m_lo + (m_hi - m_lo) * i / (kCurveSamples - 1);
            out << format_double(m) << "," << format_double(result.fit.evaluate(m)) << "\n";
        }
    });
}

}  // namespace edgemarket
