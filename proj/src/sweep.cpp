#include "edgemarket/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "edgemarket/errors.hpp"
#include "edgemarket/revenue.hpp"
#include "edgemarket/rng.hpp"

namespace edgemarket {

double PolynomialFit::evaluate(double servers) const {
    const double x = (servers - center) / scale;
    double acc = 0.0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

std::vector<SweepPoint> sweep_servers(const SimConfig& config, std::span<const int> m_grid,
                                      int trials, std::uint64_t master_seed) {
    if (m_grid.empty()) {
        throw ConfigError("sweep: m_grid must not be empty");
    }
    if (trials < 1) {
        throw ConfigError("sweep: trials must be at least 1");
    }
    for (int m : m_grid) {
        if (m < 1) throw ConfigError("sweep: server counts must be at least 1");
    }

    std::vector<SweepPoint> points;
    points.reserve(m_grid.size());
    std::vector<double> revenues(static_cast<std::size_t>(trials));

    for (int m : m_grid) {
        for (int trial = 0; trial < trials; ++trial) {
            const auto key = rng::cell_key(static_cast<std::uint64_t>(m),
                                           static_cast<std::uint64_t>(trial));
            // Fixed-population mode reuses the same population per trial
            // across all grid cells (variance reduction).
            const auto population_key =
                config.sweep.fixed_population ? static_cast<std::uint64_t>(trial) : key;
            const auto population = generate_population(
                config.population,
                rng::substream_seed(master_seed, rng::Stream::Population, population_key));
            const auto allocation = allocate(
                config.allocation_strategy, config.population.n_users,
                static_cast<std::size_t>(m),
                rng::substream_seed(master_seed, rng::Stream::Allocation, key));
            revenues[static_cast<std::size_t>(trial)] =
                simulate_once(population, allocation, config.economics, config.singleton_policy)
                    .second;
        }

        SweepPoint point;
        point.servers = m;
        point.trials = trials;
        double sum = 0.0;
        for (double w : revenues) sum += w;
        point.mean_revenue = sum / trials;
        if (trials > 1) {
            double ss = 0.0;
            for (double w : revenues) {
                const double d = w - point.mean_revenue;
                ss += d * d;
            }
            point.stddev_revenue = std::sqrt(ss / (trials - 1));
        }
        points.push_back(point);
    }
    return points;
}

namespace {

// Solves the (d+1)x(d+1) system in place by Gaussian elimination with
// partial pivoting; throws NumericalError when a pivot collapses.
std::vector<double> solve_linear(std::vector<std::vector<double>>& a, std::vector<double>& b) {
    const std::size_t n = b.size();
    double max_entry = 0.0;
    for (const auto& row : a) {
        for (double v : row) max_entry = std::max(max_entry, std::abs(v));
    }
    const double pivot_floor = std::max(max_entry, 1.0) * 1e-13;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < n; ++row) {
            if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
        }
        if (std::abs(a[pivot][col]) < pivot_floor) {
            throw NumericalError("fit: normal equations are near-singular");
        }
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t row = col + 1; row < n; ++row) {
            const double factor = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
            b[row] -= factor * b[col];
        }
    }

    std::vector<double> x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double acc = b[i];
        for (std::size_t k = i + 1; k < n; ++k) acc -= a[i][k] * x[k];
        x[i] = acc / a[i][i];
    }
    return x;
}

double eval_scaled(std::span<const double> coeffs, double x) {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace

PolynomialFit fit_revenue_curve(std::span<const SweepPoint> points, int degree) {
    if (degree < 2) {
        throw ConfigError("fit: degree must be at least 2, got " + std::to_string(degree));
    }
    if (points.size() <= static_cast<std::size_t>(degree)) {
        throw ConfigError("fit: need more than " + std::to_string(degree) + " points, got " +
                          std::to_string(points.size()));
    }

    double m_lo = points.front().servers;
    double m_hi = points.front().servers;
    for (const auto& p : points) {
        m_lo = std::min(m_lo, static_cast<double>(p.servers));
        m_hi = std::max(m_hi, static_cast<double>(p.servers));
    }
    if (m_lo == m_hi) {
        throw NumericalError("fit: all points share one server count");
    }

    PolynomialFit fit;
    fit.center = (m_lo + m_hi) / 2.0;
    fit.scale = (m_hi - m_lo) / 2.0;

    const std::size_t n_coef = static_cast<std::size_t>(degree) + 1;
    // Normal equations G c = r with G_jk = sum_i x_i^(j+k), r_j = sum_i y_i x_i^j.
    std::vector<double> power_sums(2 * n_coef - 1, 0.0);
    std::vector<double> rhs(n_coef, 0.0);
    for (const auto& p : points) {
        const double x = (p.servers - fit.center) / fit.scale;
        double xp = 1.0;
        for (std::size_t j = 0; j < power_sums.size(); ++j) {
            if (j < n_coef) rhs[j] += p.mean_revenue * xp;
            power_sums[j] += xp;
            xp *= x;
        }
    }
    std::vector<std::vector<double>> gram(n_coef, std::vector<double>(n_coef));
    for (std::size_t j = 0; j < n_coef; ++j) {
        for (std::size_t k = 0; k < n_coef; ++k) gram[j][k] = power_sums[j + k];
    }

    fit.coefficients = solve_linear(gram, rhs);

    double rss = 0.0;
    for (const auto& p : points) {
        const double r = p.mean_revenue - fit.evaluate(p.servers);
        rss += r * r;
    }
    fit.residual_norm = std::sqrt(rss);
    return fit;
}

ServerOptimum optimal_server_count(const PolynomialFit& fit, double m_lo, double m_hi,
                                   std::size_t n_users) {
    if (fit.coefficients.empty()) {
        throw ConfigError("optimal_server_count: empty fit");
    }
    if (!(m_lo <= m_hi)) {
        throw ConfigError("optimal_server_count: empty server range");
    }
    if (n_users == 0) {
        throw ConfigError("optimal_server_count: n_users must be positive");
    }

    const double x_lo = (m_lo - fit.center) / fit.scale;
    const double x_hi = (m_hi - fit.center) / fit.scale;

    std::vector<double> deriv;
    for (std::size_t i = 1; i < fit.coefficients.size(); ++i) {
        deriv.push_back(static_cast<double>(i) * fit.coefficients[i]);
    }

    // Stationary points inside (x_lo, x_hi): bracket sign changes of the
    // derivative on a fine scan, then bisect each bracket.
    std::vector<double> stationary;
    if (!deriv.empty()) {
        constexpr int kScan = 2048;
        double prev_x = x_lo;
        double prev_d = eval_scaled(deriv, prev_x);
        for (int i = 1; i <= kScan; ++i) {
            const double x = x_lo + (x_hi - x_lo) * i / kScan;
            const double d = eval_scaled(deriv, x);
            if (prev_d == 0.0 && prev_x > x_lo) {
                stationary.push_back(prev_x);
            } else if ((prev_d < 0.0) != (d < 0.0) && d != 0.0) {
                double a = prev_x, b = x, fa = prev_d;
                for (int iter = 0; iter < 80; ++iter) {
                    const double mid = (a + b) / 2.0;
                    const double fm = eval_scaled(deriv, mid);
                    if ((fa < 0.0) == (fm < 0.0)) {
                        a = mid;
                        fa = fm;
                    } else {
                        b = mid;
                    }
                }
                stationary.push_back((a + b) / 2.0);
            }
            prev_x = x;
            prev_d = d;
        }
    }

    double best_x = 0.0;
    double best_value = -std::numeric_limits<double>::infinity();
    bool best_is_endpoint = true;
    // Interior stationary points are preferred on ties so that a flat
    // optimum touching the boundary is not flagged.
    for (double x : stationary) {
        const double v = eval_scaled(fit.coefficients, x);
        if (v > best_value) {
            best_value = v;
            best_x = x;
            best_is_endpoint = false;
        }
    }
    for (double x : {x_lo, x_hi}) {
        const double v = eval_scaled(fit.coefficients, x);
        if (v > best_value) {
            best_value = v;
            best_x = x;
            best_is_endpoint = true;
        }
    }

    const double m_star = fit.center + fit.scale * best_x;
    const long long lo_int = static_cast<long long>(std::ceil(m_lo));
    const long long hi_int = static_cast<long long>(std::floor(m_hi));
    long long rounded = std::llround(m_star);
    rounded = std::clamp(rounded, std::min(lo_int, hi_int), std::max(lo_int, hi_int));

    ServerOptimum optimum;
    optimum.servers = static_cast<int>(rounded);
    optimum.ratio = static_cast<double>(rounded) / static_cast<double>(n_users);
    optimum.fitted_revenue = fit.evaluate(static_cast<double>(rounded));
    optimum.endpoint = best_is_endpoint;
    return optimum;
}

}  // namespace edgemarket
