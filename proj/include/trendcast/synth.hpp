#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "trendcast/metrics.hpp"

namespace trendcast {

/// Growth model with preferential attachment, fitness, and exponential aging.
///
/// Object a is born on day floor(a * total_days / num_objects). On each day d
/// the model adds links_per_day links; each picks an object with probability
/// proportional to (k_a(d) + 1) * fitness_a * exp(-theta * decay_a * (d - birth_a)),
/// with k_a(d) the degree at the start of day d, and a user uniformly among
/// those not yet linked to it.
///
/// Optional bursts: each day a born object starts a burst with probability
/// burst_rate; its weight is multiplied by 1 + b_a(d), where b_a jumps by
/// burst_size at each start and decays by exp(-burst_decay) per day.
struct GrowthModel {
    std::size_t num_users = 1000;
    std::size_t num_objects = 500;
    std::size_t links_per_day = 50;
    std::size_t total_days = 400;
    double theta = 0.0;
    /// Per-object attractiveness; empty means 1 for every object.
    std::vector<double> fitness;
    /// Per-object multiplier on theta; empty means 1 for every object.
    std::vector<double> decay;
    double burst_rate = 0.0;
    double burst_size = 0.0;
    double burst_decay = 0.0;
    std::uint64_t seed = 1;

    void validate() const;
    Day birth_day(ObjectId object) const;
};

/// Edges in non-decreasing day order; bit-identical for equal models.
std::vector<TemporalEdge> generate(const GrowthModel& model);

/// Lognormal fitness exp(sigma * z), z standard normal, reproducible from `seed`.
std::vector<double> lognormal_fitness(std::size_t num_objects, double sigma, std::uint64_t seed);

// Reference implementations used as test oracles. They share no code with the
// indexed paths in predictors/metrics.

/// Literal double loop over B x B' with I = 1, 0.5, 0.
double brute_force_auc(const ScoreTable& scores, const TrueFutureRanking& truth, std::size_t n);

/// Per-edge evaluation of the predictor at day t straight from the edge list.
ScoreTable brute_force_scores(std::span<const TemporalEdge> edges, Day t, const PredictorSpec& spec);

}  // namespace trendcast
