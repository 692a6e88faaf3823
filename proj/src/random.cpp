#include "trendcast/random.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace trendcast {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
    // Reject the top partial block so every residue is equally likely.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
}

double Rng::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::vector<std::int64_t> sample_without_replacement(Rng& rng, std::int64_t lo, std::int64_t hi,
                                                     std::size_t count) {
    if (hi < lo || static_cast<std::uint64_t>(hi - lo) + 1 < count) {
        throw std::invalid_argument("sample_without_replacement: range smaller than sample");
    }
    std::vector<std::int64_t> pool(static_cast<std::size_t>(hi - lo + 1));
    std::iota(pool.begin(), pool.end(), lo);
    for (std::size_t i = 0; i < count; ++i) {
        const auto j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace trendcast
