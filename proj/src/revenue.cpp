#include "edgemarket/revenue.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "edgemarket/errors.hpp"

namespace edgemarket {

const char* to_string(SetStatus status) {
    switch (status) {
        case SetStatus::Served: return "served";
        case SetStatus::DeclinedSingleton: return "declined-singleton";
        case SetStatus::Idle: return "idle";
    }
    return "idle";
}

SetStatus set_status_from_string(const std::string& name) {
    if (name == "served") return SetStatus::Served;
    if (name == "declined-singleton") return SetStatus::DeclinedSingleton;
    if (name == "idle") return SetStatus::Idle;
    throw ConfigError("set status: unknown value '" + name + "'");
}

SetOutcome run_set_auction(std::span<const EndUser> users_in_set, const EconomicParams& params,
                           SingletonPolicy policy, std::uint32_t server_id) {
    SetOutcome outcome;
    outcome.server_id = server_id;
    outcome.set_size = users_in_set.size();

    if (users_in_set.empty()) {
        outcome.status = SetStatus::Idle;
        outcome.revenue = -params.fixed_cost;
        return outcome;
    }

    {
        std::unordered_set<std::uint32_t> ids;
        for (const auto& user : users_in_set) {
            if (!ids.insert(user.id).second) {
                throw std::invalid_argument("run_set_auction: duplicate user id " +
                                            std::to_string(user.id));
            }
        }
    }

    if (users_in_set.size() == 1) {
        const EndUser& user = users_in_set.front();
        const auto decision =
            singleton_decision(user.valuation, user.q_kb, params.fixed_cost, policy);
        if (!decision.served) {
            outcome.status = SetStatus::DeclinedSingleton;
            outcome.revenue = -params.fixed_cost;
            return outcome;
        }
        outcome.status = SetStatus::Served;
        outcome.bids.push_back(decision.entry_payment);
        outcome.winner_id = user.id;
        outcome.revenue = decision.entry_payment - params.fixed_cost - std::log2(user.q_kb);
        return outcome;
    }

    const int n = static_cast<int>(users_in_set.size());
    outcome.bids.reserve(users_in_set.size());
    double bid_sum = 0.0;
    std::size_t winner_index = 0;
    for (std::size_t i = 0; i < users_in_set.size(); ++i) {
        const EndUser& user = users_in_set[i];
        const double bid = equilibrium_bid(user.valuation, user.ability, n);
        outcome.bids.push_back(bid);
        bid_sum += bid;
        const bool beats = bid > outcome.bids[winner_index] ||
                           (bid == outcome.bids[winner_index] &&
                            user.id < users_in_set[winner_index].id);
        if (i > 0 && beats) winner_index = i;
    }

    const EndUser& winner = users_in_set[winner_index];
    outcome.status = SetStatus::Served;
    outcome.winner_id = winner.id;
    outcome.revenue = bid_sum - params.fixed_cost - std::log2(winner.q_kb);
    return outcome;
}

double total_revenue(std::span<const SetOutcome> outcomes) {
    double total = 0.0;
    for (const auto& outcome : outcomes) total += outcome.revenue;
    return total;
}

std::pair<std::vector<SetOutcome>, double> simulate_once(std::span<const EndUser> population,
                                                         const Allocation& allocation,
                                                         const EconomicParams& params,
                                                         SingletonPolicy policy) {
    if (!allocation.is_partition_of(population.size())) {
        throw std::invalid_argument("simulate_once: allocation does not partition the population");
    }
    for (std::size_t i = 0; i < population.size(); ++i) {
        if (population[i].id != i) {
            throw std::invalid_argument("simulate_once: population ids must be 0..N-1 in order");
        }
    }

    std::vector<SetOutcome> outcomes;
    outcomes.reserve(allocation.n_servers);
    std::vector<EndUser> members;
    for (std::size_t j = 0; j < allocation.n_servers; ++j) {
        members.clear();
        members.reserve(allocation.sets[j].size());
        for (std::uint32_t id : allocation.sets[j]) members.push_back(population[id]);
        outcomes.push_back(
            run_set_auction(members, params, policy, static_cast<std::uint32_t>(j)));
    }
    const double total = total_revenue(outcomes);
    return {std::move(outcomes), total};
}

}  // namespace edgemarket
