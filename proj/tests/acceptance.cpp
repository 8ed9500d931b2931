// Acceptance suite: runs every release criterion at its pinned tolerance and
// prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "edgemarket/auction.hpp"
#include "edgemarket/commands.hpp"
#include "edgemarket/config.hpp"
#include "edgemarket/results.hpp"
#include "edgemarket/revenue.hpp"
#include "edgemarket/rng.hpp"
#include "edgemarket/sweep.hpp"

using namespace edgemarket;

namespace {

constexpr std::uint64_t kFixedSeeds[5] = {1, 2, 3, 4, 5};

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::size_t nearest_point(const std::vector<SweepPoint>& points, double m_star) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (std::abs(points[i].servers - m_star) < std::abs(points[best].servers - m_star)) {
            best = i;
        }
    }
    return best;
}

double z_score(const SweepPoint& a, const SweepPoint& b) {
    const double se = std::sqrt(a.stddev_revenue * a.stddev_revenue / a.trials +
                                b.stddev_revenue * b.stddev_revenue / b.trials);
    return (a.mean_revenue - b.mean_revenue) / se;
}

// 1. Revenue first rises then falls: the fitted cubic peaks strictly inside
//    the grid and beats both boundary means by >= 3 pooled standard errors.
Outcome inverted_u_shape() {
    const auto start = std::chrono::steady_clock::now();
    SimConfig config;  // N = 100, balanced, standard parameters, seed 42
    const auto grid = config.resolved_m_grid();
    const auto points = sweep_servers(config, grid, 50, config.master_seed);
    const auto fit = fit_revenue_curve(points, 3);
    const auto optimum = optimal_server_count(fit, grid.front(), grid.back(),
                                              config.population.n_users);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const auto& at_star = points[nearest_point(points, optimum.servers)];
    const double z_low = z_score(at_star, points.front());
    const double z_high = z_score(at_star, points.back());

    std::ostringstream detail;
    detail << "M*=" << optimum.servers << (optimum.endpoint ? " (endpoint!)" : "")
           << ", z(M=" << points.front().servers << ")=" << std::round(z_low * 10) / 10
           << ", z(M=" << points.back().servers << ")=" << std::round(z_high * 10) / 10 << ", "
           << std::round(seconds * 10) / 10 << "s";
    return {!optimum.endpoint && z_low >= 3.0 && z_high >= 3.0 && seconds < 30.0, detail.str()};
}

// 2. The extracted server-user ratio lands in [0.15, 0.35] for at least 4 of
//    5 fixed master seeds, for each of N = 100, 500, 1000.
Outcome optimal_ratio_band() {
    const auto start = std::chrono::steady_clock::now();
    bool pass = true;
    std::ostringstream detail;
    for (std::size_t n : {100u, 500u, 1000u}) {
        int in_band = 0;
        detail << "N=" << n << ":";
        for (std::uint64_t seed : kFixedSeeds) {
            SimConfig config;
            config.population.n_users = n;
            config.master_seed = seed;
            const auto grid = config.resolved_m_grid();
            const auto points = sweep_servers(config, grid, config.sweep.trials, seed);
            const auto fit = fit_revenue_curve(points, config.sweep.fit_degree);
            const auto optimum =
                optimal_server_count(fit, grid.front(), grid.back(), n);
            if (optimum.ratio >= 0.15 && optimum.ratio <= 0.35) ++in_band;
            detail << " " << optimum.ratio;
        }
        detail << " (" << in_band << "/5)  ";
        if (in_band < 4) pass = false;
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    detail << std::round(seconds * 10) / 10 << "s";
    return {pass && seconds < 300.0, detail.str()};
}

// 3. Random allocation at M = 95, N = 100: mean revenue is negative for all
//    5 fixed master seeds.
Outcome negative_revenue_regime() {
    std::ostringstream detail;
    bool pass = true;
    for (std::uint64_t seed : kFixedSeeds) {
        SimConfig config;
        config.allocation_strategy = AllocationStrategy::Random;
        const std::vector<int> grid = {95};
        const auto points = sweep_servers(config, grid, 50, seed);
        detail << " " << std::round(points[0].mean_revenue);
        if (!(points[0].mean_revenue < 0.0)) pass = false;
    }
    return {pass, "mean W at M=95:" + detail.str()};
}

// 4. Closed-form bids match Simpson quadrature to 1e-8 relative over the
//    full (v, A, n) grid, in under a second.
Outcome closed_form_vs_quadrature() {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (double ability : {10.0, 20.0, 30.0}) {
        for (int quarter = 0; quarter <= 4; ++quarter) {
            const double value = ability * quarter / 4.0;
            for (int n = 2; n <= 10; ++n) {
                const double closed = equilibrium_bid(value, ability, n);
                const double numeric = equilibrium_bid_numeric(value, ability, n, 10000);
                worst = std::max(worst, std::abs(closed - numeric) / std::max(closed, 1e-12));
            }
        }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream detail;
    detail << "max rel err " << worst << ", " << std::round(seconds * 1000) / 1000 << "s";
    return {worst <= 1e-8 && seconds < 1.0, detail.str()};
}

// 5. Accounting identity over 1000 randomized simulations: the summed
//    revenue equals all bids minus per-server costs within 1e-9 * M.
Outcome accounting_identity() {
    auto eng = rng::make_engine(31415);
    double worst = 0.0;
    for (int round = 0; round < 1000; ++round) {
        PopulationConfig pop_config;
        pop_config.n_users = 1 + rng::below(eng, 150);
        EconomicParams params{20.0 * rng::uniform01(eng), pop_config.q_cap_kb};
        const auto strategy = static_cast<AllocationStrategy>(rng::below(eng, 3));
        const auto policy = static_cast<SingletonPolicy>(rng::below(eng, 3));
        const std::size_t servers = 1 + rng::below(eng, 60);

        const auto population = generate_population(pop_config, eng());
        const auto allocation = allocate(strategy, pop_config.n_users, servers, eng());
        const auto [outcomes, total] = simulate_once(population, allocation, params, policy);

        double bids = 0.0, winner_costs = 0.0;
        std::size_t served = 0, dark = 0;
        for (const auto& outcome : outcomes) {
            for (double b : outcome.bids) bids += b;
            if (outcome.status == SetStatus::Served) {
                ++served;
                winner_costs += std::log2(population[*outcome.winner_id].q_kb);
            } else {
                ++dark;
            }
        }
        const double regrouped = bids - winner_costs -
                                 static_cast<double>(served + dark) * params.fixed_cost;
        const double err = std::abs(total - regrouped) / static_cast<double>(servers);
        worst = std::max(worst, err);
    }
    std::ostringstream detail;
    detail << "worst |error|/M = " << worst;
    return {worst <= 1e-9, detail.str()};
}

// 6. Two sweep runs with the same config and seed write byte-identical
//    canonical result files.
Outcome determinism() {
    const auto dir = std::filesystem::temp_directory_path();
    const std::string path = (dir / "edgemarket_acc_det.json").string();

    CommandOverrides overrides;
    overrides.users = 60;
    overrides.trials = 10;
    overrides.seed = 4242;
    overrides.output_path = path;

    std::ostringstream out, err;
    const int rc_a = cmd_sweep(overrides, out, err);
    const std::string a = read_text_file(path);
    const int rc_b = cmd_sweep(overrides, out, err);
    const std::string b = read_text_file(path);
    std::remove(path.c_str());

    std::ostringstream detail;
    detail << a.size() << " bytes each, " << (a == b ? "identical" : "DIFFER");
    return {rc_a == 0 && rc_b == 0 && !a.empty() && a == b, detail.str()};
}

// 7. Noisy-quadratic generate-and-recover: the fitted vertex lands within
//    +-1 of the true vertex in all 20 seeded repetitions.
Outcome fit_recovery() {
    double worst = 0.0;
    for (int rep = 0; rep < 20; ++rep) {
        std::mt19937_64 eng(1000 + rep);
        std::normal_distribution<double> noise(0.0, 1.0);
        std::vector<SweepPoint> points;
        for (int m = 5; m <= 95; m += 5) {
            SweepPoint p;
            p.servers = m;
            p.mean_revenue = -(m - 25.0) * (m - 25.0) + 170.0 + noise(eng);
            p.trials = 1;
            points.push_back(p);
        }
        const auto fit = fit_revenue_curve(points, 2);
        const double x = -fit.coefficients[1] / (2.0 * fit.coefficients[2]);
        const double vertex = fit.center + fit.scale * x;
        worst = std::max(worst, std::abs(vertex - 25.0));
    }
    std::ostringstream detail;
    detail << "worst |vertex - 25| = " << std::round(worst * 1000) / 1000;
    return {worst <= 1.0, detail.str()};
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"inverted-U revenue curve (N=100, cubic fit)", inverted_u_shape},
        {"optimal ratio in [0.15, 0.35] (N=100/500/1000, 5 seeds)", optimal_ratio_band},
        {"negative revenue at M=95 under random allocation", negative_revenue_regime},
        {"closed-form bid vs Simpson quadrature (<= 1e-8)", closed_form_vs_quadrature},
        {"accounting identity over 1000 randomized simulations", accounting_identity},
        {"byte-identical sweep results for identical config+seed", determinism},
        {"noisy-quadratic vertex recovery within +-1 (20 reps)", fit_recovery},
    };

    int failures = 0;
    int id = 0;
    for (const auto& [name, run] : criteria) {
        ++id;
        const auto outcome = run();
        if (!outcome.pass) ++failures;
        std::cout << "[" << id << "] " << (outcome.pass ? "PASS" : "FAIL") << "  " << name
                  << "  --  " << outcome.detail << "\n";
    }
    std::cout << (7 - failures) << "/7 acceptance criteria passed\n";
    return failures == 0 ? 0 : 1;
}
