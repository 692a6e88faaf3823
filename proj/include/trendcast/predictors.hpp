#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trendcast/tempgraph.hpp"

namespace trendcast {

class IdMap;

enum class PredictorKind { cumulative, recent, pbp, tbp };

PredictorKind parse_predictor_kind(std::string_view name);
std::string_view predictor_name(PredictorKind kind);

/// Predictor family plus the parameters it uses.
///   cumulative: s = k(t)
///   recent:     s = k(t) - k(t - T_P)
///   pbp:        s = k(t) - lambda * k(t - T_P)
///   tbp:        s = sum over link days d <= t of exp(gamma * (d - t))
struct PredictorSpec {
    PredictorKind kind = PredictorKind::cumulative;
    double lambda = 0.0;
    Day tp = 0;
    double gamma = 0.0;

    static PredictorSpec cumulative() { return {}; }
    static PredictorSpec recent(Day tp) { return {PredictorKind::recent, 0.0, tp, 0.0}; }
    static PredictorSpec pbp(Day tp, double lambda) { return {PredictorKind::pbp, lambda, tp, 0.0}; }
    static PredictorSpec tbp(double gamma) { return {PredictorKind::tbp, 0.0, 0, gamma}; }

    /// Throws ParameterError if a parameter used by `kind` is out of range.
    void validate() const;
    /// Parameters as `key=value` pairs separated by ';', e.g. "tp=30;lambda=0.98".
    std::string params() const;
};

/// Scores of the candidate objects at day t, ascending object id.
struct ScoreTable {
    Day t = 0;
    PredictorSpec spec;
    std::vector<ObjectId> objects;
    std::vector<double> scores;

    std::size_t size() const noexcept { return objects.size(); }
    /// Score of `object`, or nullopt when it is not a candidate.
    std::optional<double> score_of(ObjectId object) const;
};

ScoreTable score_cumulative(const Snapshot& snap);
ScoreTable score_recent(const Snapshot& snap, Day tp);
ScoreTable score_pbp(const Snapshot& snap, Day tp, double lambda);
/// Per-link summation, oldest link first.
ScoreTable score_tbp(const Snapshot& snap, double gamma);
/// Same value computed as sum over distinct days of count(d) * exp(gamma * (d - t)).
ScoreTable score_tbp_grouped(const Snapshot& snap, double gamma);
ScoreTable score(const Snapshot& snap, const PredictorSpec& spec);

/// Objects ordered by descending score, ties by ascending id. Positions are 1-based.
class RankedList {
public:
    RankedList() = default;
    /// Orders `objects` by `values` descending, ties by ascending id.
    RankedList(std::span<const ObjectId> objects, std::span<const double> values);

    const std::vector<ObjectId>& order() const noexcept { return order_; }
    std::size_t size() const noexcept { return order_.size(); }
    ObjectId at(std::size_t position) const { return order_.at(position - 1); }
    /// 1-based position, or 0 when the object is not in the list.
    std::size_t position_of(ObjectId object) const noexcept;
    /// First `n` objects (clamped to size).
    std::span<const ObjectId> top(std::size_t n) const;

private:
    std::vector<ObjectId> order_;
    std::vector<std::size_t> position_;
};

RankedList rank(const ScoreTable& table);

/// `# predictor=... t=...` header, then `object_id,score` rows in rank order.
/// Object labels are used when `labels` is given.
void write_score_csv(std::ostream& out, const ScoreTable& table, const IdMap* labels = nullptr);

/// Shortest round-trip decimal representation.
std::string format_double(double value);

}  // namespace trendcast
