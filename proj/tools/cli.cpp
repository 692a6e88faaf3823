#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "trendcast/experiment.hpp"
#include "trendcast/ingest.hpp"
#include "trendcast/synth.hpp"

namespace trendcast::cli {

namespace {

namespace fs = std::filesystem;

struct DataOptions {
    std::string path;
    std::string format = "generic-tsv";
    int rating_threshold = 2;
    std::string dedup = "earliest";
    bool keep_self_loops = false;
};

struct PredictorOptions {
    std::string predictor = "tbp";
    double gamma = 0.0;
    double lambda = 0.0;
    int tp = 0;
};

struct DateOptions {
    std::vector<int> t;
    std::size_t dates = 10;
    int min_history = 365;
    std::optional<std::uint64_t> seed;
};

struct Dataset {
    TemporalGraph graph;
    std::optional<IdMap> objects;
};

/// Resolved parameters echoed into every output header.
class Header {
public:
    explicit Header(std::string command) : command_(std::move(command)) {}

    template <typename T>
    void add(const std::string& key, const T& value) {
        std::ostringstream s;
        s << value;
        kv_.emplace_back(key, s.str());
    }
    void add_list(const std::string& key, const auto& values) {
        std::ostringstream s;
        for (std::size_t i = 0; i < values.size(); ++i) s << (i ? "," : "") << values[i];
        kv_.emplace_back(key, s.str());
    }

    void write(std::ostream& out) const {
        out << "# trendcast " << kVersion << ' ' << command_;
        for (const auto& [k, v] : kv_) out << ' ' << k << '=' << v;
        out << '\n';
    }

private:
    std::string command_;
    std::vector<std::pair<std::string, std::string>> kv_;
};

IngestConfig ingest_config(const DataOptions& opts) {
    IngestConfig config;
    config.format = parse_format(opts.format);
    config.rating_threshold = opts.rating_threshold;
    config.dedup = parse_dedup(opts.dedup);
    config.remove_self_loops = !opts.keep_self_loops;
    config.validate();
    return config;
}

void require_file(const std::string& path) {
    if (path.empty()) throw ParameterError("--data is required");
    if (!fs::is_regular_file(path)) throw IoError("input file not found: " + path);
}

Dataset load_dataset(const DataOptions& opts) {
    require_file(opts.path);
    {
        std::ifstream probe(opts.path, std::ios::binary);
        if (TemporalGraph::has_binary_magic(probe)) return {TemporalGraph::load(probe), std::nullopt};
    }
    auto parsed = parse_file(opts.path, ingest_config(opts));
    Dataset ds;
    ds.graph = TemporalGraph::from_edges(parsed.edges, parsed.users.size(), parsed.objects.size());
    ds.objects = std::move(parsed.objects);
    return ds;
}

void add_data_options(CLI::App* cmd, DataOptions& opts) {
    cmd->add_option("--data", opts.path, "Edge file (raw dataset or binary graph)")->required();
    cmd->add_option("--format", opts.format, "movielens | netflix | facebook-wall | generic-tsv");
    cmd->add_option("--rating-threshold", opts.rating_threshold, "Keep ratings > threshold");
    cmd->add_option("--dedup", opts.dedup, "earliest | keep-all");
    cmd->add_flag("--keep-self-loops", opts.keep_self_loops, "Keep posts on one's own wall");
}

void add_data_header(Header& h, const DataOptions& opts) {
    h.add("data", fs::path(opts.path).filename().string());
    h.add("format", opts.format);
    h.add("rating_threshold", opts.rating_threshold);
    h.add("dedup", opts.dedup);
    h.add("remove_self_loops", opts.keep_self_loops ? "false" : "true");
}

void add_predictor_options(CLI::App* cmd, PredictorOptions& opts) {
    cmd->add_option("--predictor", opts.predictor, "cumulative | recent | pbp | tbp");
    cmd->add_option("--gamma", opts.gamma, "TBP decay rate");
    cmd->add_option("--lambda", opts.lambda, "PBP mixing weight");
    cmd->add_option("--tp", opts.tp, "History window T_P in days (default: T_F)");
}

PredictorSpec predictor_spec(const PredictorOptions& opts, Day tf) {
    PredictorSpec spec;
    spec.kind = parse_predictor_kind(opts.predictor);
    spec.gamma = opts.gamma;
    spec.lambda = opts.lambda;
    spec.tp = opts.tp > 0 ? opts.tp : tf;
    if (spec.kind != PredictorKind::recent && spec.kind != PredictorKind::pbp) spec.tp = 0;
    if (spec.kind != PredictorKind::tbp) spec.gamma = 0.0;
    if (spec.kind != PredictorKind::pbp) spec.lambda = 0.0;
    spec.validate();
    return spec;
}

void add_predictor_header(Header& h, const PredictorSpec& spec) {
    h.add("predictor", predictor_name(spec.kind));
    if (spec.kind == PredictorKind::recent || spec.kind == PredictorKind::pbp) h.add("tp", spec.tp);
    if (spec.kind == PredictorKind::pbp) h.add("lambda", format_double(spec.lambda));
    if (spec.kind == PredictorKind::tbp) h.add("gamma", format_double(spec.gamma));
}

void add_date_options(CLI::App* cmd, DateOptions& opts) {
    cmd->add_option("--t", opts.t, "Test day(s); comma-separated")->delimiter(',');
    cmd->add_option("--dates", opts.dates, "Number of sampled test dates");
    cmd->add_option("--min-history", opts.min_history, "Days of history before any test date");
    cmd->add_option("--seed", opts.seed, "RNG seed for test-date sampling");
}

std::vector<Day> resolve_dates(const TemporalGraph& graph, const DateOptions& opts, Day tf,
                               Header& h) {
    if (!opts.t.empty()) {
        std::vector<Day> dates(opts.t.begin(), opts.t.end());
        std::sort(dates.begin(), dates.end());
        dates.erase(std::unique(dates.begin(), dates.end()), dates.end());
        h.add_list("t", dates);
        return dates;
    }
    if (!opts.seed) throw ParameterError("--seed is required when test dates are sampled");
    auto dates = sample_test_dates(graph, tf, opts.dates, opts.min_history, *opts.seed);
    h.add("dates", opts.dates);
    h.add("min_history", opts.min_history);
    h.add("seed", *opts.seed);
    h.add_list("t", dates);
    return dates;
}

std::vector<double> parse_grid(const std::string& text) {
    if (text.find(':') != std::string::npos) {
        double lo = 0, hi = 0, step = 0;
        char c1 = 0, c2 = 0;
        std::istringstream s(text);
        if (!(s >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || !s.eof()) {
            throw ParameterError("grid must be lo:hi:step or a comma list, got '" + text + "'");
        }
        return make_grid(lo, hi, step);
    }
    std::vector<double> grid;
    std::istringstream s(text);
    std::string item;
    while (std::getline(s, item, ',')) {
        try {
            std::size_t used = 0;
            grid.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ParameterError("bad grid value '" + item + "'");
        }
    }
    if (grid.empty()) throw ParameterError("empty grid");
    return grid;
}

/// Writes `body` to `path`, or to `fallback` when path is empty.
void emit(const std::string& path, const std::string& body, std::ostream& fallback) {
    if (path.empty()) {
        fallback << body;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot write " + path);
    f << body;
}

const IdMap* labels_of(const Dataset& ds) { return ds.objects ? &*ds.objects : nullptr; }

std::string object_label(const Dataset& ds, ObjectId a) {
    return ds.objects ? ds.objects->label(a) : std::to_string(a);
}

/// Appends `--key=value` for config-file entries not already given as flags.
std::vector<std::string> merge_config(std::vector<std::string> args) {
    auto it = std::find(args.begin(), args.end(), "--config");
    std::string path;
    if (it != args.end()) {
        if (std::next(it) == args.end()) throw ParameterError("--config needs a file");
        path = *std::next(it);
        args.erase(it, std::next(it, 2));
    } else {
        for (auto a = args.begin(); a != args.end(); ++a) {
            if (a->rfind("--config=", 0) == 0) {
                path = a->substr(9);
                args.erase(a);
                break;
            }
        }
    }
    if (path.empty()) return args;
    std::ifstream in(path);
    if (!in) throw IoError("config file not found: " + path);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParameterError("config line " + std::to_string(line_no) + ": expected key=value");
        }
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        const auto flag = "--" + key;
        const bool given = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
            return a == flag || a.rfind(flag + "=", 0) == 0;
        });
        if (!given) args.push_back(flag + "=" + value);
    }
    return args;
}

int classify(const std::exception& e) {
    if (dynamic_cast<const IoError*>(&e)) return kMissingFile;
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const EmptyDatasetError*>(&e) ||
        dynamic_cast<const ParameterError*>(&e)) {
        return kInvalidParameters;
    }
    return kInternalError;
}

const char* kind_of(int code) {
    switch (code) {
        case kMissingFile: return "missing-file";
        case kInvalidParameters: return "invalid-parameters";
        default: return "internal";
    }
}

void report_error(std::ostream& err, int code, std::string message) {
    std::replace(message.begin(), message.end(), '\n', ' ');
    err << "trendcast: error code=" << code << " kind=" << kind_of(code) << " message=\"" << message
        << "\"\n";
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Trend prediction on timestamped user-object networks", "trendcast"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    std::string out_path;

    // ingest
    DataOptions ingest_data;
    std::string users_map, objects_map, graph_path;
    std::size_t subsample = 0, min_links = 20;
    std::optional<std::uint64_t> ingest_seed;
    auto* ingest = app.add_subcommand("ingest", "Parse a raw dataset into canonical edges");
    add_data_options(ingest, ingest_data);
    ingest->add_option("--out", out_path, "Canonical edge TSV");
    ingest->add_option("--users-map", users_map, "User id-map TSV");
    ingest->add_option("--objects-map", objects_map, "Object id-map TSV");
    ingest->add_option("--graph", graph_path, "Binary graph output");
    ingest->add_option("--subsample-users", subsample, "Keep this many users (0 = all)");
    ingest->add_option("--min-links", min_links, "Eligibility floor for subsampled users");
    ingest->add_option("--seed", ingest_seed, "RNG seed for subsampling");

    // stats
    DataOptions stats_data;
    auto* stats = app.add_subcommand("stats", "Users, objects, links, and day range");
    add_data_options(stats, stats_data);
    stats->add_option("--out", out_path, "Output CSV");

    // score
    DataOptions score_data;
    PredictorOptions score_pred;
    int score_t = 0;
    auto* score_cmd = app.add_subcommand("score", "Score every candidate object at day t");
    add_data_options(score_cmd, score_data);
    add_predictor_options(score_cmd, score_pred);
    score_cmd->add_option("--t", score_t, "Test day")->required();
    score_cmd->add_option("--out", out_path, "Output CSV");

    // evaluate
    DataOptions eval_data;
    PredictorOptions eval_pred;
    DateOptions eval_dates;
    int eval_tf = 30;
    std::vector<std::size_t> eval_n{100};
    auto* evaluate = app.add_subcommand("evaluate", "Metric report for one predictor");
    add_data_options(evaluate, eval_data);
    add_predictor_options(evaluate, eval_pred);
    add_date_options(evaluate, eval_dates);
    evaluate->add_option("--tf", eval_tf, "Future window T_F in days");
    evaluate->add_option("--n", eval_n, "Top-n size(s)")->delimiter(',');
    evaluate->add_option("--out", out_path, "Output CSV");

    // sweep-gamma / sweep-lambda
    struct SweepOptions {
        DataOptions data;
        DateOptions dates;
        int tf = 30;
        std::vector<std::size_t> n{50, 100, 200};
        std::string grid = "0:1:0.01";
        std::string detail, summary;
    };
    SweepOptions sg, sl;
    auto add_sweep = [&](const char* name, const char* help, SweepOptions& o) {
        auto* cmd = app.add_subcommand(name, help);
        add_data_options(cmd, o.data);
        add_date_options(cmd, o.dates);
        cmd->add_option("--tf", o.tf, "Future window T_F in days");
        cmd->add_option("--n", o.n, "Top-n sizes")->delimiter(',');
        cmd->add_option("--grid", o.grid, "lo:hi:step or comma list");
        cmd->add_option("--out", out_path, "Averaged sweep CSV");
        cmd->add_option("--detail", o.detail, "Per-date metric CSV");
        cmd->add_option("--summary", o.summary, "Best-parameter text report");
        return cmd;
    };
    auto* sweep_gamma = add_sweep("sweep-gamma", "TBP over a gamma grid", sg);
    auto* sweep_lambda = add_sweep("sweep-lambda", "PBP over a lambda grid (T_P = T_F)", sl);

    // sweep-tf
    DataOptions stf_data;
    DateOptions stf_dates;
    std::vector<int> stf_tfs{10, 30, 60, 90};
    std::size_t stf_n = 100;
    std::string stf_gamma = "0:1:0.01", stf_lambda = "0:1:0.01", stf_summary;
    auto* sweep_tf_cmd = app.add_subcommand("sweep-tf", "Best TBP and PBP per future window");
    add_data_options(sweep_tf_cmd, stf_data);
    add_date_options(sweep_tf_cmd, stf_dates);
    sweep_tf_cmd->add_option("--tfs", stf_tfs, "Future windows")->delimiter(',');
    sweep_tf_cmd->add_option("--n", stf_n, "Top-n size");
    sweep_tf_cmd->add_option("--gamma-grid", stf_gamma, "lo:hi:step or comma list");
    sweep_tf_cmd->add_option("--lambda-grid", stf_lambda, "lo:hi:step or comma list");
    sweep_tf_cmd->add_option("--out", out_path, "T_F sweep CSV");

    // rankshift
    DataOptions rs_data;
    PredictorOptions rs_pred;
    int rs_t = 0, rs_tf = 30;
    std::size_t rs_top = 100;
    auto* rankshift = app.add_subcommand("rankshift", "dr = r_f - r_p for the true top objects");
    add_data_options(rankshift, rs_data);
    add_predictor_options(rankshift, rs_pred);
    rankshift->add_option("--t", rs_t, "Test day")->required();
    rankshift->add_option("--tf", rs_tf, "Future window T_F in days");
    rankshift->add_option("--top", rs_top, "Number of true top objects");
    rankshift->add_option("--out", out_path, "Output CSV");

    // synth
    GrowthModel model;
    double fitness_sigma = 0.0, decay_sigma = 0.0;
    std::uint64_t synth_seed = 0;
    auto* synth = app.add_subcommand("synth", "Generate a synthetic aging network as generic-tsv");
    synth->add_option("--users", model.num_users, "Number of users");
    synth->add_option("--objects", model.num_objects, "Number of objects");
    synth->add_option("--links-per-day", model.links_per_day, "Links added per day");
    synth->add_option("--days", model.total_days, "Number of days");
    synth->add_option("--theta", model.theta, "Relevance decay rate");
    synth->add_option("--fitness-sigma", fitness_sigma, "Lognormal fitness spread (0 = equal)");
    synth->add_option("--decay-sigma", decay_sigma, "Lognormal spread of per-object theta (0 = equal)");
    synth->add_option("--burst-rate", model.burst_rate, "Daily burst probability per object");
    synth->add_option("--burst-size", model.burst_size, "Weight jump at a burst");
    synth->add_option("--burst-decay", model.burst_decay, "Daily decay rate of bursts");
    synth->add_option("--seed", synth_seed, "RNG seed")->required();
    synth->add_option("--out", out_path, "Output TSV");

    try {
        auto args = merge_config(raw_args);
        std::reverse(args.begin(), args.end());
        try {
            app.parse(args);
        } catch (const CLI::Success& e) {
            app.exit(e, out, err);
            return kOk;
        } catch (const CLI::ParseError& e) {
            report_error(err, kInvalidParameters, e.what());
            return kInvalidParameters;
        }

        std::ostringstream body;

        if (ingest->parsed()) {
            if (out_path.empty()) throw ParameterError("ingest needs --out");
            require_file(ingest_data.path);
            auto parsed = parse_file(ingest_data.path, ingest_config(ingest_data));
            Header h("ingest");
            add_data_header(h, ingest_data);
            if (subsample > 0) {
                if (!ingest_seed) throw ParameterError("--seed is required with --subsample-users");
                parsed = subsample_users(parsed, min_links, subsample, *ingest_seed);
                h.add("subsample_users", subsample);
                h.add("min_links", min_links);
                h.add("seed", *ingest_seed);
            }
            h.write(body);
            write_edges_tsv(body, parsed.edges);
            emit(out_path, body.str(), out);
            if (!users_map.empty()) {
                std::ostringstream m;
                write_id_map(m, parsed.users);
                emit(users_map, m.str(), out);
            }
            if (!objects_map.empty()) {
                std::ostringstream m;
                write_id_map(m, parsed.objects);
                emit(objects_map, m.str(), out);
            }
            if (!graph_path.empty()) {
                TemporalGraph::from_edges(parsed.edges, parsed.users.size(), parsed.objects.size())
                    .save_file(graph_path);
            }
            return kOk;
        }

        if (stats->parsed()) {
            require_file(stats_data.path);
            std::vector<TemporalEdge> edges;
            std::optional<IngestCounters> counters;
            {
                std::ifstream probe(stats_data.path, std::ios::binary);
                if (TemporalGraph::has_binary_magic(probe)) {
                    edges = TemporalGraph::load(probe).edges();
                } else {
                    auto parsed = parse_file(stats_data.path, ingest_config(stats_data));
                    edges = std::move(parsed.edges);
                    counters = parsed.counters;
                }
            }
            const auto s = dataset_stats(edges);
            Header h("stats");
            add_data_header(h, stats_data);
            h.write(body);
            body << "users,objects,links,first_day,last_day";
            if (counters) body << ",rows,dropped_rating,dropped_self_loop,dropped_duplicate";
            body << '\n'
                 << s.users << ',' << s.objects << ',' << s.links << ',' << s.first_day << ','
                 << s.last_day;
            if (counters) {
                body << ',' << counters->rows << ',' << counters->dropped_rating << ','
                     << counters->dropped_self_loop << ',' << counters->dropped_duplicate;
            }
            body << '\n';
            emit(out_path, body.str(), out);
            return kOk;
        }

        if (score_cmd->parsed()) {
            const auto ds = load_dataset(score_data);
            const auto spec = predictor_spec(score_pred, 0);
            Header h("score");
            add_data_header(h, score_data);
            add_predictor_header(h, spec);
            h.add("t", score_t);
            h.write(body);
            write_score_csv(body, score(ds.graph.snapshot(score_t), spec), labels_of(ds));
            emit(out_path, body.str(), out);
            return kOk;
        }

        if (evaluate->parsed()) {
            const auto ds = load_dataset(eval_data);
            const auto spec = predictor_spec(eval_pred, eval_tf);
            Header h("evaluate");
            add_data_header(h, eval_data);
            add_predictor_header(h, spec);
            h.add("tf", eval_tf);
            h.add_list("n", eval_n);
            const auto dates = resolve_dates(ds.graph, eval_dates, eval_tf, h);
            h.write(body);
            write_metric_header(body);
            for (auto t : dates) {
                const auto cell = prepare_cell(ds.graph, t, eval_tf);
                const auto reports = evaluate_prepared(ds.graph, cell, spec, eval_n);
                for (const auto& r : reports) write_metric_row(body, spec, t, eval_tf, r);
            }
            emit(out_path, body.str(), out);
            return kOk;
        }

        if (sweep_gamma->parsed() || sweep_lambda->parsed()) {
            const bool is_gamma = sweep_gamma->parsed();
            auto& o = is_gamma ? sg : sl;
            const auto family = is_gamma ? PredictorKind::tbp : PredictorKind::pbp;
            const auto ds = load_dataset(o.data);
            const auto grid = parse_grid(o.grid);
            Header h(is_gamma ? "sweep-gamma" : "sweep-lambda");
            add_data_header(h, o.data);
            h.add("tf", o.tf);
            if (!is_gamma) h.add("tp", o.tf);
            h.add_list("n", o.n);
            h.add("grid", o.grid);
            const auto dates = resolve_dates(ds.graph, o.dates, o.tf, h);
            const auto result = sweep(ds.graph, family, grid, dates, o.tf, o.n);
            h.write(body);
            write_sweep_csv(body, result);
            emit(out_path, body.str(), out);
            if (!o.detail.empty()) {
                std::ostringstream d;
                h.write(d);
                write_sweep_detail_csv(d, result);
                emit(o.detail, d.str(), out);
            }
            if (!o.summary.empty()) {
                std::ostringstream s;
                h.write(s);
                for (auto n : o.n) {
                    s << "n=" << n << '\n';
                    write_summary(s, {result}, n);
                }
                emit(o.summary, s.str(), out);
            }
            return kOk;
        }

        if (sweep_tf_cmd->parsed()) {
            const auto ds = load_dataset(stf_data);
            const auto gamma_grid = parse_grid(stf_gamma);
            const auto lambda_grid = parse_grid(stf_lambda);
            Header h("sweep-tf");
            add_data_header(h, stf_data);
            h.add_list("tfs", stf_tfs);
            h.add("n", stf_n);
            h.add("gamma_grid", stf_gamma);
            h.add("lambda_grid", stf_lambda);
            std::vector<Day> tfs(stf_tfs.begin(), stf_tfs.end());
            std::vector<std::vector<Day>> dates;
            for (auto tf : tfs) {
                Header scratch("");
                dates.push_back(resolve_dates(ds.graph, stf_dates, tf, scratch));
            }
            if (stf_dates.t.empty()) {
                h.add("dates", stf_dates.dates);
                h.add("min_history", stf_dates.min_history);
                h.add("seed", *stf_dates.seed);
            } else {
                h.add_list("t", dates.front());
            }
            const auto rows = sweep_tf(ds.graph, tfs, dates, stf_n, gamma_grid, lambda_grid);
            h.write(body);
            write_tf_csv(body, rows);
            emit(out_path, body.str(), out);
            return kOk;
        }

        if (rankshift->parsed()) {
            const auto ds = load_dataset(rs_data);
            const auto spec = predictor_spec(rs_pred, rs_tf);
            Header h("rankshift");
            add_data_header(h, rs_data);
            add_predictor_header(h, spec);
            h.add("t", rs_t);
            h.add("tf", rs_tf);
            h.add("top", rs_top);
            const auto cell = prepare_cell(ds.graph, rs_t, rs_tf);
            const auto predicted = rank(score(ds.graph.snapshot(rs_t), spec));
            const auto rows = rank_shift(predicted, cell.truth, cell.past, rs_top);
            h.write(body);
            body << "object_id,r_k,dr\n";
            for (const auto& r : rows) {
                body << object_label(ds, r.object) << ',' << r.past_rank << ',' << r.shift << '\n';
            }
            emit(out_path, body.str(), out);
            return kOk;
        }

        if (synth->parsed()) {
            model.seed = synth_seed;
            if (fitness_sigma > 0.0) {
                model.fitness = lognormal_fitness(model.num_objects, fitness_sigma, synth_seed + 1);
            }
            if (decay_sigma > 0.0) {
                model.decay = lognormal_fitness(model.num_objects, decay_sigma, synth_seed + 2);
            }
            const auto edges = generate(model);
            Header h("synth");
            h.add("users", model.num_users);
            h.add("objects", model.num_objects);
            h.add("links_per_day", model.links_per_day);
            h.add("days", model.total_days);
            h.add("theta", format_double(model.theta));
            h.add("fitness_sigma", format_double(fitness_sigma));
            h.add("decay_sigma", format_double(decay_sigma));
            h.add("burst_rate", format_double(model.burst_rate));
            h.add("burst_size", format_double(model.burst_size));
            h.add("burst_decay", format_double(model.burst_decay));
            h.add("seed", synth_seed);
            h.write(body);
            write_edges_tsv(body, edges);
            emit(out_path, body.str(), out);
            return kOk;
        }
        throw InvariantError("no subcommand dispatched");
    } catch (const std::exception& e) {
        const int code = classify(e);
        report_error(err, code, e.what());
        return code;
    }
}

}  // namespace trendcast::cli
