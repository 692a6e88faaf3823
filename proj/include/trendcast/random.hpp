#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace trendcast {

/// Seeded generator with platform-independent derived distributions.
///
/// The raw engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. The std:: distributions are not, so every draw goes through the
/// helpers below to keep traces identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be > 0.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01();

private:
    std::mt19937_64 engine_;
};

/// `count` distinct values from [lo, hi] (inclusive), returned ascending.
/// Uses a partial Fisher-Yates shuffle over the range; requires hi - lo + 1 >= count.
std::vector<std::int64_t> sample_without_replacement(Rng& rng, std::int64_t lo, std::int64_t hi,
                                                     std::size_t count);

}  // namespace trendcast
