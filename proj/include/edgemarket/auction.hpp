#pragma once

#include <string>

namespace edgemarket {

/// How the entry payment e is chosen inside the feasible interval
/// [B + log2(q), v/2) when a single-bidder set is served.
enum class SingletonPolicy {
    Lower,     // e = B + log2(q): server breaks even exactly
    Midpoint,  // e halfway between the bounds
    Upper,     // e = v/2 - epsilon: near-total surplus extraction
};

const char* to_string(SingletonPolicy policy);
SingletonPolicy singleton_policy_from_string(const std::string& name);

/// Serve-or-decline outcome for a one-bidder set.
struct SingletonDecision {
    bool served = false;
    double entry_payment = 0.0;  // e, meaningful only when served
    double eu_utility = 0.0;     // u = v - e, meaningful only when served
};

/// Upper support A of a bidder's uniform valuation distribution,
/// A = k * log10(f_t). Requires f_t > 1 MHz and k > 0 so that A > 0.
double valuation_ability(double f_t_mhz, double k);

/// v = A * sqrt(q / Q). Requires 0 < q <= Q and A > 0; v lies in (0, A].
double valuation(double ability, double q_kb, double q_cap_kb);

/// Symmetric equilibrium bid for a bidder with valuation v and uniform
/// distribution on [0, A], competing against set_size - 1 rivals:
/// integral of t dF^(n-1)(t) from 0 to v, which for F(t) = t/A has the
/// closed form ((n-1)/n) * v^n / A^(n-1). Requires set_size >= 2.
double equilibrium_bid(double value, double ability, int set_size);

/// Composite-Simpson estimate of the same integral; testing oracle only,
/// never used on the simulation path.
double equilibrium_bid_numeric(double value, double ability, int set_size, int subdivisions);

/// One-bidder analysis: the set is served iff the entry-payment interval
/// [B + log2(q), v/2) is non-empty, i.e. v > 2 * (B + log2(q)).
SingletonDecision singleton_decision(double value, double q_kb, double fixed_cost,
                                     SingletonPolicy policy);

}  // namespace edgemarket
