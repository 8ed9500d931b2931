#include "edgemarket/auction.hpp"

#include <cmath>
#include <stdexcept>

#include "edgemarket/errors.hpp"

namespace edgemarket {

namespace {
constexpr double kUpperPolicyEpsilon = 1e-6;
}

const char* to_string(SingletonPolicy policy) {
    switch (policy) {
        case SingletonPolicy::Lower: return "lower";
        case SingletonPolicy::Midpoint: return "midpoint";
        case SingletonPolicy::Upper: return "upper";
    }
    return "midpoint";
}

SingletonPolicy singleton_policy_from_string(const std::string& name) {
    if (name == "lower") return SingletonPolicy::Lower;
    if (name == "midpoint") return SingletonPolicy::Midpoint;
    if (name == "upper") return SingletonPolicy::Upper;
    throw ConfigError("singleton_policy: unknown policy '" + name +
                      "' (expected lower, midpoint, or upper)");
}

double valuation_ability(double f_t_mhz, double k) {
    if (!(f_t_mhz > 1.0)) {
        throw std::domain_error("valuation_ability: f_t must exceed 1 MHz, got " +
                                std::to_string(f_t_mhz));
    }
    if (!(k > 0.0)) {
        throw std::domain_error("valuation_ability: k must be positive, got " + std::to_string(k));
    }
    return k * std::log10(f_t_mhz);
}

double valuation(double ability, double q_kb, double q_cap_kb) {
    if (!(ability > 0.0)) {
        throw std::domain_error("valuation: ability must be positive");
    }
    if (!(q_kb > 0.0) || q_kb > q_cap_kb) {
        throw std::domain_error("valuation: q must lie in (0, Q], got q=" + std::to_string(q_kb) +
                                " with Q=" + std::to_string(q_cap_kb));
    }
    return ability * std::sqrt(q_kb / q_cap_kb);
}

double equilibrium_bid(double value, double ability, int set_size) {
    if (set_size < 2) {
        throw std::invalid_argument(
            "equilibrium_bid: set_size must be >= 2; one-bidder sets use singleton_decision");
    }
    if (!(ability > 0.0)) {
        throw std::domain_error("equilibrium_bid: ability must be positive");
    }
    if (value < 0.0 || value > ability) {
        throw std::domain_error("equilibrium_bid: value must lie in [0, ability]");
    }
    if (value == 0.0) return 0.0;
    const double n = static_cast<double>(set_size);
    return (n - 1.0) / n * value * std::pow(value / ability, set_size - 1);
}

double equilibrium_bid_numeric(double value, double ability, int set_size, int subdivisions) {
    if (set_size < 2) {
        throw std::invalid_argument("equilibrium_bid_numeric: set_size must be >= 2");
    }
    if (!(ability > 0.0)) {
        throw std::domain_error("equilibrium_bid_numeric: ability must be positive");
    }
    if (value < 0.0 || value > ability) {
        throw std::domain_error("equilibrium_bid_numeric: value must lie in [0, ability]");
    }
    if (subdivisions < 2) {
        throw std::invalid_argument("equilibrium_bid_numeric: subdivisions must be >= 2");
    }
    if (value == 0.0) return 0.0;

    // Integrand t * dF^(n-1)(t)/dt = (n-1) * (t/A)^(n-1); Simpson needs an
    // even interval count.
    const int m = (subdivisions % 2 == 0) ? subdivisions : subdivisions + 1;
    const double n_minus_1 = static_cast<double>(set_size - 1);
    const auto f = [&](double t) { return n_minus_1 * std::pow(t / ability, set_size - 1); };

    const double h = value / m;
    double sum = f(0.0) + f(value);
    for (int i = 1; i < m; ++i) {
        sum += f(i * h) * ((i % 2 == 1) ? 4.0 : 2.0);
    }
    return sum * h / 3.0;
}

SingletonDecision singleton_decision(double value, double q_kb, double fixed_cost,
                                     SingletonPolicy policy) {
    if (value < 0.0) {
        throw std::domain_error("singleton_decision: value must be non-negative");
    }
    if (!(q_kb > 0.0)) {
        throw std::domain_error("singleton_decision: q must be positive");
    }
    if (fixed_cost < 0.0) {
        throw std::domain_error("singleton_decision: fixed_cost must be non-negative");
    }

    const double lower = fixed_cost + std::log2(q_kb);
    const double upper = value / 2.0;  // e < u = v - e  <=>  e < v/2
    if (!(lower < upper)) {
        return SingletonDecision{};  // interval empty: server declines
    }

    double payment = 0.0;
    switch (policy) {
        case SingletonPolicy::Lower:
            payment = lower;
            break;
        case SingletonPolicy::Midpoint:
            payment = (lower + upper) / 2.0;
            break;
        case SingletonPolicy::Upper:
            // Clamp keeps the payment inside [lower, upper) when the feasible
            // interval is narrower than epsilon.
            payment = std::max(lower, upper - kUpperPolicyEpsilon);
            break;
    }
    return SingletonDecision{true, payment, value - payment};
}

}  // namespace edgemarket
