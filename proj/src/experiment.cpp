#include "trendcast/experiment.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "trendcast/parallel.hpp"
#include "trendcast/random.hpp"

namespace trendcast {

std::vector<double> make_grid(double lo, double hi, double step) {
    if (!(step > 0.0) || !(hi >= lo)) throw ParameterError("grid needs step > 0 and hi >= lo");
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> grid;
    grid.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double v = lo + static_cast<double>(i) * step;
        grid.push_back(std::round(v * 1e10) / 1e10);
    }
    return grid;
}

void ExperimentConfig::validate() const {
    if (n_values.empty()) throw ParameterError("n_values must be nonempty");
    for (auto n : n_values) {
        if (n < 1) throw ParameterError("every n must be >= 1");
    }
    if (tf < 1) throw ParameterError("T_F must be at least one day");
    if (num_test_dates < 1) throw ParameterError("need at least one test date");
    if (min_history < 1) throw ParameterError("min_history must be >= 1");
    if (gamma_grid.empty() || lambda_grid.empty()) throw ParameterError("grids must be nonempty");
}

std::vector<Day> sample_test_dates(const TemporalGraph& graph, Day tf, std::size_t count,
                                   Day min_history, std::uint64_t seed) {
    const std::int64_t lo = std::int64_t{graph.day_min()} + min_history;
    const std::int64_t hi = std::int64_t{graph.day_max()} - tf;
    if (hi < lo || static_cast<std::uint64_t>(hi - lo + 1) < count) {
        throw ParameterError("eligible test-date range [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "] holds fewer than " + std::to_string(count) +
                             " days");
    }
    Rng rng(seed);
    const auto picks = sample_without_replacement(rng, lo, hi, count);
    return {picks.begin(), picks.end()};
}

PreparedCell prepare_cell(const TemporalGraph& graph, Day t, Day tf) {
    PreparedCell cell;
    cell.t = t;
    cell.tf = tf;
    cell.truth = true_future_ranking(graph, t, tf);
    cell.past = past_ranking(graph.snapshot(t));
    return cell;
}

std::vector<MetricReport> evaluate_prepared(const TemporalGraph& graph, const PreparedCell& cell,
                                            const PredictorSpec& spec,
                                            const std::vector<std::size_t>& n_values) {
    const auto table = score(graph.snapshot(cell.t), spec);
    const auto predicted = rank(table);
    return evaluate_metrics(table, predicted, cell.truth, cell.past, n_values);
}

MetricReport evaluate_cell(const TemporalGraph& graph, const PredictorSpec& spec, Day t, Day tf,
                           std::size_t n) {
    spec.validate();
    const auto cell = prepare_cell(graph, t, tf);
    return evaluate_prepared(graph, cell, spec, {n}).front();
}

PredictorSpec spec_for(PredictorKind family, double param, Day tp) {
    switch (family) {
        case PredictorKind::cumulative: return PredictorSpec::cumulative();
        case PredictorKind::recent: return PredictorSpec::recent(tp);
        case PredictorKind::pbp: return PredictorSpec::pbp(tp, param);
        case PredictorKind::tbp: return PredictorSpec::tbp(param);
    }
    throw InvariantError("unhandled predictor kind");
}

std::size_t SweepResult::best_index(std::size_t n_index) const {
    if (grid.empty()) throw InvariantError("best_index on an empty sweep");
    std::size_t best = 0;
    for (std::size_t g = 1; g < grid.size(); ++g) {
        const double p = at(g, n_index).precision;
        const double pb = at(best, n_index).precision;
        if (p > pb || (p == pb && grid[g] < grid[best])) best = g;
    }
    return best;
}

namespace {

SweepPoint average(double param, std::size_t n, std::vector<MetricReport> per_date) {
    SweepPoint p;
    p.param = param;
    p.n = n;
    double novelty_sum = 0.0;
    for (const auto& r : per_date) {
        p.auc += r.auc;
        p.precision += r.precision;
        if (r.novelty) {
            novelty_sum += *r.novelty;
            ++p.novelty_dates;
        } else {
            ++p.novelty_excluded;
        }
    }
    const auto dates = static_cast<double>(per_date.size());
    p.auc /= dates;
    p.precision /= dates;
    if (p.novelty_dates > 0) p.novelty = novelty_sum / static_cast<double>(p.novelty_dates);
    p.per_date = std::move(per_date);
    return p;
}

}  // namespace

SweepResult sweep(const TemporalGraph& graph, PredictorKind family, const std::vector<double>& grid,
                  const std::vector<Day>& dates, Day tf, const std::vector<std::size_t>& n_values) {
    if (grid.empty()) throw ParameterError("sweep grid must be nonempty");
    if (dates.empty()) throw ParameterError("sweep needs at least one test date");
    if (n_values.empty()) throw ParameterError("sweep needs at least one n");
    for (double v : grid) spec_for(family, v, tf).validate();

    SweepResult result;
    result.family = family;
    result.tf = tf;
    result.tp = (family == PredictorKind::recent || family == PredictorKind::pbp) ? tf : 0;
    result.grid = grid;
    result.dates = dates;
    result.n_values = n_values;

    std::vector<PreparedCell> cells(dates.size());
    parallel_for(dates.size(), [&](std::size_t d) { cells[d] = prepare_cell(graph, dates[d], tf); });

    // reports[g][d] holds one MetricReport per n.
    std::vector<std::vector<std::vector<MetricReport>>> reports(
        grid.size(), std::vector<std::vector<MetricReport>>(dates.size()));
    parallel_for(grid.size() * dates.size(), [&](std::size_t job) {
        const auto g = job / dates.size();
        const auto d = job % dates.size();
        reports[g][d] = evaluate_prepared(graph, cells[d], spec_for(family, grid[g], tf), n_values);
    });

    result.points.reserve(grid.size() * n_values.size());
    for (std::size_t g = 0; g < grid.size(); ++g) {
        for (std::size_t k = 0; k < n_values.size(); ++k) {
            std::vector<MetricReport> per_date;
            per_date.reserve(dates.size());
            for (std::size_t d = 0; d < dates.size(); ++d) per_date.push_back(reports[g][d][k]);
            result.points.push_back(average(grid[g], n_values[k], std::move(per_date)));
        }
    }
    return result;
}

std::vector<TfRow> sweep_tf(const TemporalGraph& graph, const std::vector<Day>& tf_list,
                            const std::vector<std::vector<Day>>& dates_per_tf, std::size_t n,
                            const std::vector<double>& gamma_grid,
                            const std::vector<double>& lambda_grid) {
    if (tf_list.size() != dates_per_tf.size()) {
        throw ParameterError("sweep_tf: one date list per T_F is required");
    }
    std::vector<TfRow> rows;
    for (std::size_t i = 0; i < tf_list.size(); ++i) {
        const auto tbp = sweep(graph, PredictorKind::tbp, gamma_grid, dates_per_tf[i], tf_list[i], {n});
        rows.push_back({tf_list[i], PredictorKind::tbp, tbp.best(0)});
        const auto pbp = sweep(graph, PredictorKind::pbp, lambda_grid, dates_per_tf[i], tf_list[i], {n});
        rows.push_back({tf_list[i], PredictorKind::pbp, pbp.best(0)});
    }
    return rows;
}

namespace {

void write_point(std::ostream& out, const SweepPoint& p) {
    out << format_double(p.auc) << ',' << format_double(p.precision) << ',';
    if (p.novelty) out << format_double(*p.novelty);
    out << ',' << p.novelty_dates << ',' << p.novelty_excluded;
}

}  // namespace

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
    out << "predictor,param,T_F,T_P,n,AUC,Pn,Qn,Qn_dates,Qn_excluded\n";
    for (const auto& p : result.points) {
        out << predictor_name(result.family) << ',' << format_double(p.param) << ',' << result.tf
            << ',' << result.tp << ',' << p.n << ',';
        write_point(out, p);
        out << '\n';
    }
}

void write_sweep_detail_csv(std::ostream& out, const SweepResult& result) {
    write_metric_header(out);
    for (const auto& p : result.points) {
        const auto spec = spec_for(result.family, p.param, result.tf);
        for (std::size_t d = 0; d < result.dates.size(); ++d) {
            write_metric_row(out, spec, result.dates[d], result.tf, p.per_date[d]);
        }
    }
}

void write_tf_csv(std::ostream& out, const std::vector<TfRow>& rows) {
    out << "T_F,predictor,best_param,n,AUC,Pn,Qn,Qn_dates,Qn_excluded\n";
    for (const auto& r : rows) {
        out << r.tf << ',' << predictor_name(r.family) << ',' << format_double(r.best.param) << ','
            << r.best.n << ',';
        write_point(out, r.best);
        out << '\n';
    }
}

void write_summary(std::ostream& out, const std::vector<SweepResult>& results, std::size_t n) {
    const auto precision = out.precision();
    out << std::left << std::setw(12) << "Predictor" << std::setw(12) << "Parameter"
        << std::setw(10) << "AUC" << std::setw(10) << "P_n" << std::setw(10) << "Q_n" << '\n';
    for (const auto& res : results) {
        std::size_t k = 0;
        while (k < res.n_values.size() && res.n_values[k] != n) ++k;
        if (k == res.n_values.size()) throw ParameterError("summary n not present in sweep");
        const auto& best = res.best(k);
        std::ostringstream q;
        if (best.novelty) {
            q << std::fixed << std::setprecision(3) << *best.novelty;
        } else {
            q << "n/a";
        }
        out << std::left << std::setw(12) << predictor_name(res.family) << std::setw(12)
            << format_double(best.param) << std::fixed << std::setprecision(3) << std::setw(10)
            << best.auc << std::setw(10) << best.precision << std::setw(10) << q.str() << '\n';
        out.unsetf(std::ios::fixed);
    }
    out.precision(precision);
}

}  // namespace trendcast
