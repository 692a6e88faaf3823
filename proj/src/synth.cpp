#include "trendcast/synth.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <unordered_set>

#include "trendcast/random.hpp"

namespace trendcast {

void GrowthModel::validate() const {
    if (num_users == 0 || num_objects == 0 || links_per_day == 0 || total_days == 0) {
        throw ParameterError("growth model counts must be positive");
    }
    if (!(theta >= 0.0) || !std::isfinite(theta)) throw ParameterError("theta must be >= 0");
    if (!fitness.empty()) {
        if (fitness.size() != num_objects) throw ParameterError("fitness needs one value per object");
        for (double f : fitness) {
            if (!(f > 0.0) || !std::isfinite(f)) throw ParameterError("fitness must be positive");
        }
    }
    if (!(burst_rate >= 0.0 && burst_rate <= 1.0)) throw ParameterError("burst_rate must be in [0, 1]");
    if (!(burst_size >= 0.0) || !std::isfinite(burst_size)) throw ParameterError("burst_size must be >= 0");
    if (!(burst_decay >= 0.0) || !std::isfinite(burst_decay)) {
        throw ParameterError("burst_decay must be >= 0");
    }
    if (!decay.empty()) {
        if (decay.size() != num_objects) throw ParameterError("decay needs one value per object");
        for (double r : decay) {
            if (!(r >= 0.0) || !std::isfinite(r)) throw ParameterError("decay must be >= 0");
        }
    }
}

Day GrowthModel::birth_day(ObjectId object) const {
    return static_cast<Day>(std::size_t{object} * total_days / num_objects);
}

std::vector<TemporalEdge> generate(const GrowthModel& model) {
    model.validate();
    Rng rng(model.seed);
    std::vector<std::size_t> degree(model.num_objects, 0);
    std::unordered_set<std::uint64_t> linked;
    std::vector<TemporalEdge> edges;
    edges.reserve(model.links_per_day * model.total_days);
    std::vector<double> cumulative(model.num_objects);
    std::vector<double> burst(model.num_objects, 0.0);
    const bool bursts = model.burst_rate > 0.0 && model.burst_size > 0.0;
    const double burst_keep = std::exp(-model.burst_decay);

    const auto pair_key = [](UserId u, ObjectId a) { return (std::uint64_t{u} << 32) | a; };

    for (std::size_t day = 0; day < model.total_days; ++day) {
        const auto d = static_cast<Day>(day);
        double total = 0.0;
        for (ObjectId a = 0; a < model.num_objects; ++a) {
            double w = 0.0;
            const Day birth = model.birth_day(a);
            if (bursts && birth <= d) {
                burst[a] *= burst_keep;
                if (rng.uniform01() < model.burst_rate) burst[a] += model.burst_size;
            }
            if (birth <= d && degree[a] < model.num_users) {
                const double f = model.fitness.empty() ? 1.0 : model.fitness[a];
                const double r = model.decay.empty() ? 1.0 : model.decay[a];
                w = static_cast<double>(degree[a] + 1) * f *
                    std::exp(-model.theta * r * static_cast<double>(d - birth)) * (1.0 + burst[a]);
            }
            total += w;
            cumulative[a] = total;
        }
        if (!(total > 0.0)) continue;

        for (std::size_t l = 0; l < model.links_per_day; ++l) {
            // Objects can fill up within a day; redraw in that case.
            for (int attempt = 0; attempt < 1000; ++attempt) {
                const double x = rng.uniform01() * total;
                const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), x);
                if (it == cumulative.end()) continue;
                const auto a = static_cast<ObjectId>(it - cumulative.begin());
                if (degree[a] >= model.num_users) continue;
                auto u = static_cast<UserId>(rng.below(model.num_users));
                while (linked.count(pair_key(u, a))) {
                    u = static_cast<UserId>((u + 1) % model.num_users);
                }
                linked.insert(pair_key(u, a));
                ++degree[a];
                edges.push_back({u, a, d});
                break;
            }
        }
    }
    return edges;
}

std::vector<double> lognormal_fitness(std::size_t num_objects, double sigma, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> out(num_objects);
    for (auto& f : out) {
        // Box-Muller; 1 - u keeps the log argument in (0, 1].
        const double u1 = 1.0 - rng.uniform01();
        const double u2 = rng.uniform01();
        const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
        f = std::exp(sigma * z);
    }
    return out;
}

double brute_force_auc(const ScoreTable& scores, const TrueFutureRanking& truth, std::size_t n) {
    const auto total = scores.objects.size();
    if (n < 1 || n >= total) throw ParameterError("brute_force_auc needs 1 <= n < candidates");
    std::vector<bool> in_benchmark(total, false);
    for (auto a : truth.ranking.top(n)) {
        for (std::size_t i = 0; i < total; ++i) {
            if (scores.objects[i] == a) in_benchmark[i] = true;
        }
    }
    std::int64_t twice_sum = 0;
    for (std::size_t i = 0; i < total; ++i) {
        if (!in_benchmark[i]) continue;
        for (std::size_t j = 0; j < total; ++j) {
            if (in_benchmark[j]) continue;
            if (scores.scores[i] > scores.scores[j]) {
                twice_sum += 2;
            } else if (scores.scores[i] == scores.scores[j]) {
                twice_sum += 1;
            }
        }
    }
    const auto b = static_cast<std::int64_t>(n);
    const auto b_rest = static_cast<std::int64_t>(total - n);
    return static_cast<double>(twice_sum) / static_cast<double>(2 * b * b_rest);
}

ScoreTable brute_force_scores(std::span<const TemporalEdge> edges, Day t, const PredictorSpec& spec) {
    spec.validate();
    struct Acc {
        std::int64_t now = 0;
        std::int64_t before = 0;
        double decayed = 0.0;
    };
    std::map<ObjectId, Acc> acc;
    for (const auto& e : edges) {
        if (e.day > t) continue;
        auto& a = acc[e.object];
        ++a.now;
        if (e.day <= t - spec.tp) ++a.before;
        a.decayed += std::exp(spec.gamma * static_cast<double>(e.day - t));
    }
    ScoreTable table;
    table.t = t;
    table.spec = spec;
    for (const auto& [object, a] : acc) {
        table.objects.push_back(object);
        switch (spec.kind) {
            case PredictorKind::cumulative: table.scores.push_back(static_cast<double>(a.now)); break;
            case PredictorKind::recent:
                table.scores.push_back(static_cast<double>(a.now - a.before));
                break;
            case PredictorKind::pbp:
                table.scores.push_back(static_cast<double>(a.now) -
                                       spec.lambda * static_cast<double>(a.before));
                break;
            case PredictorKind::tbp: table.scores.push_back(a.decayed); break;
        }
    }
    return table;
}

}  // namespace trendcast
