#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "trendcast/random.hpp"
#include "trendcast/types.hpp"

namespace trendcast::testing {

inline std::string data_path(const std::string& name) {
    return std::string(TRENDCAST_TEST_DATA) + "/" + name;
}

/// Object 0 has link days {3, 7, 20}; objects 1-3 fill out the day range [0, 25].
inline std::vector<TemporalEdge> small_fixture() {
    return {
        {0, 0, 3}, {1, 0, 7}, {2, 0, 20},
        {0, 1, 0}, {3, 1, 5}, {1, 1, 12}, {2, 1, 25},
        {3, 2, 9}, {4, 2, 9}, {0, 2, 22},
        {4, 3, 15},
    };
}

/// Random edge list: `objects` objects, `users` users, days in [0, days),
/// unique (user, object) pairs.
inline std::vector<TemporalEdge> random_edges(Rng& rng, std::size_t users, std::size_t objects,
                                              std::size_t links, Day days) {
    std::vector<TemporalEdge> edges;
    std::vector<bool> used(users * objects, false);
    while (edges.size() < links) {
        const auto u = static_cast<UserId>(rng.below(users));
        const auto o = static_cast<ObjectId>(rng.below(objects));
        if (used[u * objects + o]) continue;
        used[u * objects + o] = true;
        edges.push_back({u, o, static_cast<Day>(rng.below(static_cast<std::uint64_t>(days)))});
    }
    // Pin the day range so every random graph spans [0, days - 1].
    edges.front().day = 0;
    edges.back().day = days - 1;
    return edges;
}

}  // namespace trendcast::testing
