#include "edgemarket/allocation.hpp"

#include <numeric>

#include "edgemarket/errors.hpp"
#include "edgemarket/rng.hpp"

namespace edgemarket {

const char* to_string(AllocationStrategy strategy) {
    switch (strategy) {
        case AllocationStrategy::Balanced: return "balanced";
        case AllocationStrategy::RoundRobin: return "round_robin";
        case AllocationStrategy::Random: return "random";
    }
    return "balanced";
}

AllocationStrategy allocation_strategy_from_string(const std::string& name) {
    if (name == "balanced") return AllocationStrategy::Balanced;
    if (name == "round_robin") return AllocationStrategy::RoundRobin;
    if (name == "random") return AllocationStrategy::Random;
    throw ConfigError("allocation.strategy: unknown strategy '" + name +
                      "' (expected balanced, round_robin, or random)");
}

bool Allocation::is_partition_of(std::size_t n_users) const {
    if (sets.size() != n_servers) return false;
    std::vector<char> seen(n_users, 0);
    std::size_t count = 0;
    for (const auto& set : sets) {
        for (std::uint32_t id : set) {
            if (id >= n_users || seen[id]) return false;
            seen[id] = 1;
            ++count;
        }
    }
    return count == n_users;
}

namespace {

void require_servers(std::size_t n_servers) {
    if (n_servers == 0) {
        throw ConfigError("allocation: n_servers must be at least 1");
    }
}

std::vector<std::uint32_t> identity_ids(std::size_t n_users) {
    std::vector<std::uint32_t> ids(n_users);
    std::iota(ids.begin(), ids.end(), 0u);
    return ids;
}

}  // namespace

Allocation allocate_balanced(std::size_t n_users, std::size_t n_servers, std::uint64_t seed) {
    require_servers(n_servers);
    auto ids = identity_ids(n_users);
    auto eng = rng::make_engine(seed);
    rng::shuffle(ids, eng);

    // First (n_users mod M) sets take the extra user.
    const std::size_t base = n_users / n_servers;
    const std::size_t remainder = n_users % n_servers;

    Allocation allocation;
    allocation.n_servers = n_servers;
    allocation.sets.resize(n_servers);
    std::size_t pos = 0;
    for (std::size_t j = 0; j < n_servers; ++j) {
        const std::size_t size = base + (j < remainder ? 1 : 0);
        allocation.sets[j].assign(ids.begin() + pos, ids.begin() + pos + size);
        pos += size;
    }
    return allocation;
}

Allocation allocate_round_robin(std::size_t n_users, std::size_t n_servers) {
    require_servers(n_servers);
    Allocation allocation;
    allocation.n_servers = n_servers;
    allocation.sets.resize(n_servers);
    for (std::size_t i = 0; i < n_users; ++i) {
        allocation.sets[i % n_servers].push_back(static_cast<std::uint32_t>(i));
    }
    return allocation;
}

Allocation allocate_random(std::size_t n_users, std::size_t n_servers, std::uint64_t seed) {
    require_servers(n_servers);
    auto eng = rng::make_engine(seed);
    Allocation allocation;
    allocation.n_servers = n_servers;
    allocation.sets.resize(n_servers);
    for (std::size_t i = 0; i < n_users; ++i) {
        allocation.sets[rng::below(eng, n_servers)].push_back(static_cast<std::uint32_t>(i));
    }
    return allocation;
}

Allocation allocate(AllocationStrategy strategy, std::size_t n_users, std::size_t n_servers,
                    std::uint64_t seed) {
    switch (strategy) {
        case AllocationStrategy::Balanced: return allocate_balanced(n_users, n_servers, seed);
        case AllocationStrategy::RoundRobin: return allocate_round_robin(n_users, n_servers);
        case AllocationStrategy::Random: return allocate_random(n_users, n_servers, seed);
    }
    throw ConfigError("allocation: invalid strategy value");
}

}  // namespace edgemarket
