#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "trendcast/predictors.hpp"

namespace trendcast {

/// Candidates at t ranked by their increase over the future window (t, t + T_F].
struct TrueFutureRanking {
    Day t = 0;
    Day tf = 0;
    std::vector<ObjectId> objects;       ///< ascending id, same domain as the score tables
    std::vector<std::size_t> increase;   ///< Delta k per entry of `objects`
    RankedList ranking;                  ///< by increase descending, ties by ascending id
};

TrueFutureRanking true_future_ranking(const TemporalGraph& graph, Day t, Day tf);

/// Candidates at t ranked by cumulative degree k(t); the "past" ranking for novelty.
RankedList past_ranking(const Snapshot& snap);

/// AUC of `scores` against the benchmark set B = top-n of `truth`.
///
/// Exact Mann-Whitney form with midranks for tied scores, which equals the
/// pairwise mean of I(s_a, s_b) over B x B'. Requires 1 <= n < |candidates|
/// and a score table over the same candidates as `truth`.
double auc(const ScoreTable& scores, const TrueFutureRanking& truth, std::size_t n);
/// auc() for several benchmark sizes, sharing one sort of the scores.
std::vector<double> auc_for_each(const ScoreTable& scores, const TrueFutureRanking& truth,
                                 const std::vector<std::size_t>& n_values);

/// D_n: objects shared by the predicted and true top-n.
std::size_t common_top_n(const RankedList& predicted, const TrueFutureRanking& truth,
                         std::size_t n);
/// D_n / n.
double precision(const RankedList& predicted, const TrueFutureRanking& truth, std::size_t n);

struct NoveltyCounts {
    std::size_t new_entries = 0;  ///< E_n
    std::size_t caught = 0;       ///< C_n
    /// C_n / E_n, empty when E_n == 0.
    std::optional<double> value() const;
};

NoveltyCounts novelty(const RankedList& predicted, const TrueFutureRanking& truth,
                      const RankedList& past, std::size_t n);

struct RankShift {
    ObjectId object = 0;
    std::size_t past_rank = 0;  ///< r_k
    std::int64_t shift = 0;     ///< dr = r_f - r_p
};

/// One row per object in the true top `top`, in true-rank order.
std::vector<RankShift> rank_shift(const RankedList& predicted, const TrueFutureRanking& truth,
                                  const RankedList& past, std::size_t top);

struct MetricReport {
    std::size_t n = 0;
    double auc = 0.0;
    double precision = 0.0;
    std::optional<double> novelty;
    std::size_t common = 0;       ///< D_n
    std::size_t new_entries = 0;  ///< E_n
    std::size_t caught = 0;       ///< C_n
};

MetricReport evaluate_metrics(const ScoreTable& scores, const RankedList& predicted,
                              const TrueFutureRanking& truth, const RankedList& past,
                              std::size_t n);
std::vector<MetricReport> evaluate_metrics(const ScoreTable& scores, const RankedList& predicted,
                                           const TrueFutureRanking& truth, const RankedList& past,
                                           const std::vector<std::size_t>& n_values);

/// `predictor,params,t,T_F,n,AUC,Pn,Qn,Dn,En,Cn`
void write_metric_header(std::ostream& out);
void write_metric_row(std::ostream& out, const PredictorSpec& spec, Day t, Day tf,
                      const MetricReport& report);

}  // namespace trendcast
