#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "trendcast/metrics.hpp"

namespace trendcast {

/// Evenly spaced grid lo, lo + step, ..., hi (inclusive), each value rounded
/// to 10 decimals so that e.g. 0.06 prints as "0.06".
std::vector<double> make_grid(double lo, double hi, double step);

struct ExperimentConfig {
    std::vector<std::size_t> n_values{50, 100, 200};
    Day tf = 30;
    std::size_t num_test_dates = 10;
    Day min_history = 365;
    std::uint64_t seed = 0;
    std::vector<double> gamma_grid = make_grid(0.0, 1.0, 0.01);
    std::vector<double> lambda_grid = make_grid(0.0, 1.0, 0.01);

    void validate() const;
};

/// `count` distinct days drawn uniformly from [day_min + min_history, day_max - tf],
/// ascending, reproducible from `seed`. Throws ParameterError when the
/// eligible range holds fewer than `count` days.
std::vector<Day> sample_test_dates(const TemporalGraph& graph, Day tf, std::size_t count,
                                   Day min_history, std::uint64_t seed);

/// Everything about a (t, T_F) pair that does not depend on the predictor.
struct PreparedCell {
    Day t = 0;
    Day tf = 0;
    TrueFutureRanking truth;
    RankedList past;
};

PreparedCell prepare_cell(const TemporalGraph& graph, Day t, Day tf);

/// Scores only the snapshot at t, then compares against the prepared truth.
std::vector<MetricReport> evaluate_prepared(const TemporalGraph& graph, const PreparedCell& cell,
                                            const PredictorSpec& spec,
                                            const std::vector<std::size_t>& n_values);

MetricReport evaluate_cell(const TemporalGraph& graph, const PredictorSpec& spec, Day t, Day tf,
                           std::size_t n);

/// The predictor of `family` at grid value `param` (gamma for tbp, lambda for pbp).
PredictorSpec spec_for(PredictorKind family, double param, Day tp);

/// Metrics averaged over test dates for one grid point and one n.
struct SweepPoint {
    double param = 0.0;
    std::size_t n = 0;
    double auc = 0.0;
    double precision = 0.0;
    std::optional<double> novelty;       ///< mean over dates with E_n > 0
    std::size_t novelty_dates = 0;       ///< dates contributing to `novelty`
    std::size_t novelty_excluded = 0;    ///< dates with E_n == 0
    std::vector<MetricReport> per_date;  ///< same order as SweepResult::dates
};

struct SweepResult {
    PredictorKind family = PredictorKind::tbp;
    Day tf = 0;
    Day tp = 0;
    std::vector<double> grid;
    std::vector<Day> dates;
    std::vector<std::size_t> n_values;
    /// points[g * n_values.size() + k] is grid[g] at n_values[k].
    std::vector<SweepPoint> points;

    const SweepPoint& at(std::size_t grid_index, std::size_t n_index) const {
        return points.at(grid_index * n_values.size() + n_index);
    }
    /// Grid index with the highest mean precision at n_values[n_index];
    /// ties go to the smaller parameter.
    std::size_t best_index(std::size_t n_index) const;
    const SweepPoint& best(std::size_t n_index) const { return at(best_index(n_index), n_index); }
};

/// Evaluates `family` at every grid value on the same `dates`. T_P is set to
/// `tf` for recent and pbp. Grid points run in parallel; the reduction order
/// is fixed, so results do not depend on the thread count.
SweepResult sweep(const TemporalGraph& graph, PredictorKind family, const std::vector<double>& grid,
                  const std::vector<Day>& dates, Day tf, const std::vector<std::size_t>& n_values);

struct TfRow {
    Day tf = 0;
    PredictorKind family = PredictorKind::tbp;
    SweepPoint best;
};

/// For each T_F, the best tbp and pbp points (pbp with T_P = T_F) on the
/// dates given for that T_F. `dates_per_tf[i]` pairs with `tf_list[i]`.
std::vector<TfRow> sweep_tf(const TemporalGraph& graph, const std::vector<Day>& tf_list,
                            const std::vector<std::vector<Day>>& dates_per_tf, std::size_t n,
                            const std::vector<double>& gamma_grid,
                            const std::vector<double>& lambda_grid);

/// `predictor,param,T_F,T_P,n,AUC,Pn,Qn,Qn_dates,Qn_excluded`, one row per grid point per n.
void write_sweep_csv(std::ostream& out, const SweepResult& result);
/// Per-date metric rows for every grid point (metric CSV layout).
void write_sweep_detail_csv(std::ostream& out, const SweepResult& result);
/// `T_F,predictor,best_param,n,AUC,Pn,Qn,Qn_dates,Qn_excluded`
void write_tf_csv(std::ostream& out, const std::vector<TfRow>& rows);
/// Fixed-width best-parameter table: Predictor, Parameter, AUC, P_n, Q_n.
void write_summary(std::ostream& out, const std::vector<SweepResult>& results, std::size_t n);

}  // namespace trendcast
