#include "trendcast/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace trendcast {

TrueFutureRanking true_future_ranking(const TemporalGraph& graph, Day t, Day tf) {
    if (tf < 1) throw ParameterError("T_F must be at least one day");
    TrueFutureRanking truth;
    truth.t = t;
    truth.tf = tf;
    truth.objects = graph.candidates(t);
    truth.increase.reserve(truth.objects.size());
    std::vector<double> values;
    values.reserve(truth.objects.size());
    for (auto a : truth.objects) {
        const auto dk = graph.popularity_increase(a, t, tf);
        truth.increase.push_back(dk);
        values.push_back(static_cast<double>(dk));
    }
    truth.ranking = RankedList(truth.objects, values);
    return truth;
}

RankedList past_ranking(const Snapshot& snap) { return rank(score_cumulative(snap)); }

std::vector<double> auc_for_each(const ScoreTable& scores, const TrueFutureRanking& truth,
                                 const std::vector<std::size_t>& n_values) {
    const auto total = truth.objects.size();
    for (auto n : n_values) {
        if (n < 1 || n >= total) {
            throw ParameterError("AUC needs 1 <= n < candidate count (n=" + std::to_string(n) +
                                 ", candidates=" + std::to_string(total) + ")");
        }
    }
    if (scores.objects != truth.objects) {
        throw InvariantError("score table and truth cover different candidate sets");
    }
    std::vector<std::size_t> idx(total);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return scores.scores[a] < scores.scores[b]; });

    // Twice the midrank of each entry: lo + hi over its tie block, 1-based.
    std::vector<std::int64_t> twice_rank(total);
    for (std::size_t i = 0; i < total;) {
        std::size_t j = i;
        while (j < total && scores.scores[idx[j]] == scores.scores[idx[i]]) ++j;
        const auto lo = static_cast<std::int64_t>(i + 1);
        const auto hi = static_cast<std::int64_t>(j);
        for (std::size_t k = i; k < j; ++k) twice_rank[idx[k]] = lo + hi;
        i = j;
    }

    std::vector<double> out;
    out.reserve(n_values.size());
    for (auto n : n_values) {
        std::int64_t twice_rank_sum = 0;
        for (auto a : truth.ranking.top(n)) {
            const auto pos = std::lower_bound(truth.objects.begin(), truth.objects.end(), a) -
                             truth.objects.begin();
            twice_rank_sum += twice_rank[static_cast<std::size_t>(pos)];
        }
        // 2U = 2 * (rank sum of B) - |B|(|B| + 1); AUC = U / (|B| |B'|).
        const auto b = static_cast<std::int64_t>(n);
        const auto b_rest = static_cast<std::int64_t>(total - n);
        const std::int64_t twice_u = twice_rank_sum - b * (b + 1);
        out.push_back(static_cast<double>(twice_u) / static_cast<double>(2 * b * b_rest));
    }
    return out;
}

double auc(const ScoreTable& scores, const TrueFutureRanking& truth, std::size_t n) {
    return auc_for_each(scores, truth, {n}).front();
}

std::size_t common_top_n(const RankedList& predicted, const TrueFutureRanking& truth,
                         std::size_t n) {
    if (n < 1 || n > truth.ranking.size()) {
        throw ParameterError("precision needs 1 <= n <= candidate count");
    }
    std::size_t common = 0;
    for (auto a : predicted.top(n)) {
        const auto p = truth.ranking.position_of(a);
        if (p != 0 && p <= n) ++common;
    }
    return common;
}

double precision(const RankedList& predicted, const TrueFutureRanking& truth, std::size_t n) {
    return static_cast<double>(common_top_n(predicted, truth, n)) / static_cast<double>(n);
}

std::optional<double> NoveltyCounts::value() const {
    if (new_entries == 0) return std::nullopt;
    return static_cast<double>(caught) / static_cast<double>(new_entries);
}

NoveltyCounts novelty(const RankedList& predicted, const TrueFutureRanking& truth,
                      const RankedList& past, std::size_t n) {
    if (n < 1) throw ParameterError("novelty needs n >= 1");
    NoveltyCounts counts;
    for (auto a : truth.ranking.top(n)) {
        const auto past_pos = past.position_of(a);
        if (past_pos != 0 && past_pos <= n) continue;
        ++counts.new_entries;
        const auto pred_pos = predicted.position_of(a);
        if (pred_pos != 0 && pred_pos <= n) ++counts.caught;
    }
    return counts;
}

std::vector<RankShift> rank_shift(const RankedList& predicted, const TrueFutureRanking& truth,
                                  const RankedList& past, std::size_t top) {
    if (top > truth.ranking.size()) throw ParameterError("rank_shift: top exceeds candidate count");
    std::vector<RankShift> rows;
    rows.reserve(top);
    for (std::size_t r = 1; r <= top; ++r) {
        const auto a = truth.ranking.at(r);
        const auto rp = predicted.position_of(a);
        const auto rk = past.position_of(a);
        if (rp == 0 || rk == 0) throw InvariantError("rank_shift: rankings cover different objects");
        rows.push_back({a, rk, static_cast<std::int64_t>(r) - static_cast<std::int64_t>(rp)});
    }
    return rows;
}

std::vector<MetricReport> evaluate_metrics(const ScoreTable& scores, const RankedList& predicted,
                                           const TrueFutureRanking& truth, const RankedList& past,
                                           const std::vector<std::size_t>& n_values) {
    const auto aucs = auc_for_each(scores, truth, n_values);
    std::vector<MetricReport> reports;
    reports.reserve(n_values.size());
    for (std::size_t k = 0; k < n_values.size(); ++k) {
        MetricReport r;
        r.n = n_values[k];
        r.auc = aucs[k];
        r.common = common_top_n(predicted, truth, r.n);
        r.precision = static_cast<double>(r.common) / static_cast<double>(r.n);
        const auto nov = novelty(predicted, truth, past, r.n);
        r.new_entries = nov.new_entries;
        r.caught = nov.caught;
        r.novelty = nov.value();
        if (r.caught > r.common || r.caught > r.new_entries || r.new_entries > r.n) {
            throw InvariantError("metric counts violate C_n <= D_n, C_n <= E_n <= n");
        }
        reports.push_back(r);
    }
    return reports;
}

MetricReport evaluate_metrics(const ScoreTable& scores, const RankedList& predicted,
                              const TrueFutureRanking& truth, const RankedList& past,
                              std::size_t n) {
    return evaluate_metrics(scores, predicted, truth, past, std::vector<std::size_t>{n}).front();
}

void write_metric_header(std::ostream& out) { out << "predictor,params,t,T_F,n,AUC,Pn,Qn,Dn,En,Cn\n"; }

void write_metric_row(std::ostream& out, const PredictorSpec& spec, Day t, Day tf,
                      const MetricReport& r) {
    out << predictor_name(spec.kind) << ',' << spec.params() << ',' << t << ',' << tf << ','
        << r.n << ',' << format_double(r.auc) << ',' << format_double(r.precision) << ',';
    if (r.novelty) out << format_double(*r.novelty);
    out << ',' << r.common << ',' << r.new_entries << ',' << r.caught << '\n';
}

}  // namespace trendcast
