#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "edgemarket/config.hpp"

namespace edgemarket {

/// Aggregated revenue at one server count.
struct SweepPoint {
    int servers = 0;
    double mean_revenue = 0.0;
    double stddev_revenue = 0.0;  // sample stddev across trials (0 when trials == 1)
    int trials = 0;
};

/// Least-squares polynomial in the scaled variable x = (m - center) / scale.
/// Centering/scaling to [-1, 1] keeps the normal equations well conditioned;
/// coefficients are reported in the scaled basis together with the transform.
struct PolynomialFit {
    std::vector<double> coefficients;  // ascending degree, scaled basis
    double center = 0.0;
    double scale = 1.0;
    double residual_norm = 0.0;

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    double evaluate(double servers) const;
};

struct ServerOptimum {
    int servers = 0;           // M*, rounded into the swept range
    double ratio = 0.0;        // M* / N
    double fitted_revenue = 0.0;
    bool endpoint = false;     // fit maximized only at a grid boundary; widen the grid
};

/// Monte Carlo sweep over candidate server counts. Each (servers, trial)
/// cell draws a fresh population and allocation from substreams of the
/// master seed; cells never perturb each other, so extending the grid or
/// adding trials leaves existing cells' results unchanged.
std::vector<SweepPoint> sweep_servers(const SimConfig& config, std::span<const int> m_grid,
                                      int trials, std::uint64_t master_seed);

/// Least-squares polynomial through (servers, mean_revenue). Requires
/// degree >= 2 and more points than the degree.
PolynomialFit fit_revenue_curve(std::span<const SweepPoint> points, int degree);

/// Argmax of the fitted polynomial over [m_lo, m_hi], located from the
/// derivative's real roots and the interval endpoints.
ServerOptimum optimal_server_count(const PolynomialFit& fit, double m_lo, double m_hi,
                                   std::size_t n_users);

}  // namespace edgemarket
