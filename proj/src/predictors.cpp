#include "trendcast/predictors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <ostream>

#include "trendcast/ingest.hpp"

namespace trendcast {

namespace {

ScoreTable empty_table(const Snapshot& snap, const PredictorSpec& spec) {
    ScoreTable table;
    table.t = snap.cut();
    table.spec = spec;
    table.objects = snap.candidates();
    table.scores.resize(table.objects.size());
    return table;
}

void check_history(const Snapshot& snap, Day tp) {
    if (static_cast<std::int64_t>(snap.cut()) - tp < snap.day_min()) {
        throw ParameterError("history window t - T_P = " + std::to_string(snap.cut() - tp) +
                             " precedes first day " + std::to_string(snap.day_min()));
    }
}

// exp(gamma * (d - t)) for every offset t - d in [0, t - day_min].
std::vector<double> decay_table(const Snapshot& snap, double gamma) {
    const auto span = static_cast<std::size_t>(snap.cut() - snap.day_min()) + 1;
    std::vector<double> w(span);
    for (std::size_t age = 0; age < span; ++age) {
        w[age] = std::exp(-gamma * static_cast<double>(age));
    }
    return w;
}

}  // namespace

PredictorKind parse_predictor_kind(std::string_view name) {
    if (name == "cumulative" || name == "pa") return PredictorKind::cumulative;
    if (name == "recent") return PredictorKind::recent;
    if (name == "pbp") return PredictorKind::pbp;
    if (name == "tbp") return PredictorKind::tbp;
    throw ParameterError("unknown predictor '" + std::string(name) + "'");
}

std::string_view predictor_name(PredictorKind kind) {
    switch (kind) {
        case PredictorKind::cumulative: return "cumulative";
        case PredictorKind::recent: return "recent";
        case PredictorKind::pbp: return "pbp";
        case PredictorKind::tbp: return "tbp";
    }
    return "?";
}

void PredictorSpec::validate() const {
    switch (kind) {
        case PredictorKind::cumulative: break;
        case PredictorKind::pbp:
            if (!(lambda >= 0.0 && lambda <= 1.0)) throw ParameterError("lambda must lie in [0,1]");
            [[fallthrough]];
        case PredictorKind::recent:
            if (tp < 1) throw ParameterError("T_P must be at least one day");
            break;
        case PredictorKind::tbp:
            if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
                throw ParameterError("gamma must be finite and >= 0");
            }
            break;
    }
}

std::string PredictorSpec::params() const {
    switch (kind) {
        case PredictorKind::cumulative: return "";
        case PredictorKind::recent: return "tp=" + std::to_string(tp);
        case PredictorKind::pbp: return "tp=" + std::to_string(tp) + ";lambda=" + format_double(lambda);
        case PredictorKind::tbp: return "gamma=" + format_double(gamma);
    }
    return "";
}

std::optional<double> ScoreTable::score_of(ObjectId object) const {
    auto it = std::lower_bound(objects.begin(), objects.end(), object);
    if (it == objects.end() || *it != object) return std::nullopt;
    return scores[static_cast<std::size_t>(it - objects.begin())];
}

ScoreTable score_cumulative(const Snapshot& snap) {
    auto table = empty_table(snap, PredictorSpec::cumulative());
    for (std::size_t i = 0; i < table.size(); ++i) {
        table.scores[i] = static_cast<double>(snap.degree(table.objects[i]));
    }
    return table;
}

ScoreTable score_recent(const Snapshot& snap, Day tp) {
    const auto spec = PredictorSpec::recent(tp);
    spec.validate();
    check_history(snap, tp);
    auto table = empty_table(snap, spec);
    const Day past = snap.cut() - tp;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto a = table.objects[i];
        table.scores[i] = static_cast<double>(snap.degree(a) - snap.degree_at(a, past));
    }
    return table;
}

ScoreTable score_pbp(const Snapshot& snap, Day tp, double lambda) {
    const auto spec = PredictorSpec::pbp(tp, lambda);
    spec.validate();
    check_history(snap, tp);
    auto table = empty_table(snap, spec);
    const Day past = snap.cut() - tp;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto a = table.objects[i];
        table.scores[i] = static_cast<double>(snap.degree(a)) -
                          lambda * static_cast<double>(snap.degree_at(a, past));
    }
    return table;
}

ScoreTable score_tbp(const Snapshot& snap, double gamma) {
    const auto spec = PredictorSpec::tbp(gamma);
    spec.validate();
    auto table = empty_table(snap, spec);
    const auto w = decay_table(snap, gamma);
    const Day t = snap.cut();
    for (std::size_t i = 0; i < table.size(); ++i) {
        double s = 0.0;
        for (Day d : snap.link_days(table.objects[i])) s += w[static_cast<std::size_t>(t - d)];
        table.scores[i] = s;
    }
    return table;
}

ScoreTable score_tbp_grouped(const Snapshot& snap, double gamma) {
    const auto spec = PredictorSpec::tbp(gamma);
    spec.validate();
    auto table = empty_table(snap, spec);
    const Day t = snap.cut();
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto days = snap.link_days(table.objects[i]);
        double s = 0.0;
        for (std::size_t j = 0; j < days.size();) {
            std::size_t k = j;
            while (k < days.size() && days[k] == days[j]) ++k;
            s += static_cast<double>(k - j) * std::exp(gamma * static_cast<double>(days[j] - t));
            j = k;
        }
        table.scores[i] = s;
    }
    return table;
}

ScoreTable score(const Snapshot& snap, const PredictorSpec& spec) {
    switch (spec.kind) {
        case PredictorKind::cumulative: return score_cumulative(snap);
        case PredictorKind::recent: return score_recent(snap, spec.tp);
        case PredictorKind::pbp: return score_pbp(snap, spec.tp, spec.lambda);
        case PredictorKind::tbp: return score_tbp(snap, spec.gamma);
    }
    throw InvariantError("unhandled predictor kind");
}

RankedList::RankedList(std::span<const ObjectId> objects, std::span<const double> values) {
    if (objects.size() != values.size()) throw InvariantError("RankedList: size mismatch");
    std::vector<std::size_t> idx(objects.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (values[a] != values[b]) return values[a] > values[b];
        return objects[a] < objects[b];
    });
    order_.reserve(idx.size());
    ObjectId max_id = 0;
    for (auto i : idx) {
        order_.push_back(objects[i]);
        max_id = std::max(max_id, objects[i]);
    }
    position_.assign(order_.empty() ? 0 : std::size_t{max_id} + 1, 0);
    for (std::size_t p = 0; p < order_.size(); ++p) position_[order_[p]] = p + 1;
}

std::size_t RankedList::position_of(ObjectId object) const noexcept {
    return object < position_.size() ? position_[object] : 0;
}

std::span<const ObjectId> RankedList::top(std::size_t n) const {
    return std::span<const ObjectId>(order_).first(std::min(n, order_.size()));
}

RankedList rank(const ScoreTable& table) {
    if (table.objects.empty()) throw ParameterError("cannot rank an empty score table");
    return RankedList(table.objects, table.scores);
}

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) throw InvariantError("format_double failed");
    return std::string(buf, ptr);
}

void write_score_csv(std::ostream& out, const ScoreTable& table, const IdMap* labels) {
    out << "# predictor=" << predictor_name(table.spec.kind);
    if (const auto p = table.spec.params(); !p.empty()) out << ' ' << p;
    out << " t=" << table.t << '\n';
    out << "object_id,score\n";
    const auto ranked = rank(table);
    for (auto a : ranked.order()) {
        if (labels) {
            out << labels->label(a);
        } else {
            out << a;
        }
        out << ',' << format_double(*table.score_of(a)) << '\n';
    }
}

}  // namespace trendcast
