#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edgemarket/allocation.hpp"
#include "edgemarket/auction.hpp"
#include "edgemarket/population.hpp"

namespace edgemarket {

struct EconomicParams {
    double fixed_cost = 10.0;  // B, charged to every server regardless of status
    double q_cap_kb = 500.0;   // Q, shared with PopulationConfig
};

enum class SetStatus {
    Served,             // auction ran (n >= 2) or feasible singleton accepted
    DeclinedSingleton,  // one bidder, entry-payment interval empty
    Idle,               // empty set
};

const char* to_string(SetStatus status);
SetStatus set_status_from_string(const std::string& name);

/// Result of one server's auction.
struct SetOutcome {
    std::uint32_t server_id = 0;
    std::size_t set_size = 0;
    std::vector<double> bids;  // per user, in the set's order; empty unless served
    std::optional<std::uint32_t> winner_id;
    double revenue = 0.0;
    SetStatus status = SetStatus::Idle;
};

/// Runs one set's auction. With n >= 2 every user pays its equilibrium bid
/// and the highest bid wins (ties to the lowest user id); server revenue is
/// sum(bids) - B - log2(q_winner). A singleton goes through
/// singleton_decision; declined singletons and idle servers earn -B.
SetOutcome run_set_auction(std::span<const EndUser> users_in_set, const EconomicParams& params,
                           SingletonPolicy policy, std::uint32_t server_id = 0);

/// Sum of per-server revenues in the given (fixed) order.
double total_revenue(std::span<const SetOutcome> outcomes);

/// One full market round: one auction per server, plus the total.
std::pair<std::vector<SetOutcome>, double> simulate_once(std::span<const EndUser> population,
                                                         const Allocation& allocation,
                                                         const EconomicParams& params,
                                                         SingletonPolicy policy);

}  // namespace edgemarket
