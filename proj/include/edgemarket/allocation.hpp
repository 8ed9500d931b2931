#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace edgemarket {

enum class AllocationStrategy {
    Balanced,    // even set sizes, user order shuffled by seed
    RoundRobin,  // user i -> server i mod M, no randomness
    Random,      // each user picks a server uniformly; servers may stay empty
};

const char* to_string(AllocationStrategy strategy);
AllocationStrategy allocation_strategy_from_string(const std::string& name);

/// Exact partition of user ids 0..N-1 into one set per server.
struct Allocation {
    std::size_t n_servers = 0;
    std::vector<std::vector<std::uint32_t>> sets;

    /// True iff the sets are pairwise disjoint and cover 0..n_users-1 exactly.
    bool is_partition_of(std::size_t n_users) const;
};

Allocation allocate_balanced(std::size_t n_users, std::size_t n_servers, std::uint64_t seed);
Allocation allocate_round_robin(std::size_t n_users, std::size_t n_servers);
Allocation allocate_random(std::size_t n_users, std::size_t n_servers, std::uint64_t seed);

Allocation allocate(AllocationStrategy strategy, std::size_t n_users, std::size_t n_servers,
                    std::uint64_t seed);

}  // namespace edgemarket
