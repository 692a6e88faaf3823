#include "trendcast/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <unordered_set>

#include "trendcast/random.hpp"

namespace trendcast {

namespace {

constexpr std::int64_t kSecondsPerDay = 86400;

struct RawRecord {
    std::string user;
    std::string object;
    std::int64_t time = 0;  // epoch seconds, or a day index for generic-tsv
    std::size_t line = 0;
};

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        const auto start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

std::vector<std::string_view> split_on(std::string_view s, std::string_view sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    for (;;) {
        const auto next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            out.push_back(s.substr(pos));
            return out;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + sep.size();
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::int64_t parse_int(std::string_view s, std::size_t line, const char* field) {
    std::int64_t v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError(line, std::string("invalid ") + field + " '" + std::string(s) + "'");
    }
    return v;
}

double parse_rating(std::string_view s, std::size_t line) {
    double v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError(line, "invalid rating '" + std::string(s) + "'");
    }
    if (!(v >= 0.0 && v <= 5.0)) {
        throw ParseError(line, "rating out of range [0,5]: '" + std::string(s) + "'");
    }
    return v;
}

// Epoch seconds at 00:00 UTC of a YYYY-MM-DD date.
std::int64_t parse_date(std::string_view s, std::size_t line) {
    const auto parts = split_on(s, "-");
    if (parts.size() != 3 || parts[0].size() != 4 || parts[1].size() != 2 || parts[2].size() != 2) {
        throw ParseError(line, "invalid date '" + std::string(s) + "'");
    }
    using namespace std::chrono;
    const year_month_day ymd{year{static_cast<int>(parse_int(parts[0], line, "year"))},
                             month{static_cast<unsigned>(parse_int(parts[1], line, "month"))},
                             day{static_cast<unsigned>(parse_int(parts[2], line, "day"))}};
    if (!ymd.ok()) throw ParseError(line, "invalid date '" + std::string(s) + "'");
    return sys_days{ymd}.time_since_epoch().count() * kSecondsPerDay;
}

std::int64_t parse_timestamp(std::string_view s, std::size_t line) {
    if (s.find('-', 1) != std::string_view::npos) return parse_date(s, line);
    const auto v = parse_int(s, line, "timestamp");
    if (v < 0) throw ParseError(line, "negative timestamp");
    return v;
}

class RowReader {
public:
    RowReader(const IngestConfig& config, IngestCounters& counters)
        : config_(config), counters_(counters) {}

    void feed(std::string_view raw, std::size_t line) {
        const auto text = trim(raw);
        if (text.empty()) return;
        switch (config_.format) {
            case InputFormat::generic_tsv: generic(raw, text, line); break;
            case InputFormat::movielens: movielens(text, line); break;
            case InputFormat::netflix: netflix(text, line); break;
            case InputFormat::facebook_wall: facebook(text, line); break;
        }
    }

    std::vector<RawRecord> take() { return std::move(records_); }

private:
    void accept(std::string_view user, std::string_view object, std::int64_t time,
                std::optional<double> rating, std::size_t line) {
        if (user.empty() || object.empty()) throw ParseError(line, "empty id");
        if (rating && *rating <= config_.rating_threshold) {
            ++counters_.dropped_rating;
            return;
        }
        records_.push_back({std::string(user), std::string(object), time, line});
    }

    void generic(std::string_view raw, std::string_view text, std::size_t line) {
        if (text.front() == '#') return;
        ++counters_.rows;
        auto row = raw;
        if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
        const auto fields = split_on(row, "\t");
        if (fields.size() != 3 && fields.size() != 4) {
            throw ParseError(line, "expected 3 or 4 tab-separated fields, got " +
                                       std::to_string(fields.size()));
        }
        const auto day = parse_int(fields[2], line, "day");
        if (day < 0) throw ParseError(line, "negative day");
        std::optional<double> rating;
        if (fields.size() == 4) rating = parse_rating(fields[3], line);
        accept(fields[0], fields[1], day, rating, line);
    }

    void movielens(std::string_view text, std::size_t line) {
        if (text.front() == '%' || text.front() == '#') return;
        ++counters_.rows;
        const auto fields = text.find("::") != std::string_view::npos ? split_on(text, "::")
                                                                      : split_ws(text);
        if (fields.size() != 4) {
            throw ParseError(line, "expected user, movie, rating, timestamp");
        }
        accept(fields[0], fields[1], parse_timestamp(fields[3], line),
               parse_rating(fields[2], line), line);
    }

    void netflix(std::string_view text, std::size_t line) {
        if (text.front() == '%' || text.front() == '#') return;
        if (text.back() == ':') {
            current_movie_ = std::string(text.substr(0, text.size() - 1));
            if (current_movie_.empty()) throw ParseError(line, "empty movie header");
            return;
        }
        ++counters_.rows;
        if (text.find(',') != std::string_view::npos) {
            const auto fields = split_on(text, ",");
            if (fields.size() != 3) throw ParseError(line, "expected customer,rating,date");
            if (current_movie_.empty()) throw ParseError(line, "rating row before movie header");
            accept(fields[0], current_movie_, parse_timestamp(fields[2], line),
                   parse_rating(fields[1], line), line);
            return;
        }
        const auto fields = split_ws(text);
        if (fields.size() != 4) throw ParseError(line, "expected user, movie, rating, timestamp");
        accept(fields[0], fields[1], parse_timestamp(fields[3], line),
               parse_rating(fields[2], line), line);
    }

    void facebook(std::string_view text, std::size_t line) {
        if (text.front() == '%' || text.front() == '#') return;
        ++counters_.rows;
        const auto fields = split_ws(text);
        if (fields.size() != 3 && fields.size() != 4) {
            throw ParseError(line, "expected poster, owner, [weight,] timestamp");
        }
        const auto poster = fields[0];
        const auto owner = fields[1];
        const auto time = parse_timestamp(fields.back(), line);
        if (config_.remove_self_loops && poster == owner) {
            ++counters_.dropped_self_loop;
            return;
        }
        accept(poster, owner, time, std::nullopt, line);
    }

    const IngestConfig& config_;
    IngestCounters& counters_;
    std::vector<RawRecord> records_;
    std::string current_movie_;
};

}  // namespace

InputFormat parse_format(std::string_view name) {
    if (name == "movielens") return InputFormat::movielens;
    if (name == "netflix") return InputFormat::netflix;
    if (name == "facebook-wall") return InputFormat::facebook_wall;
    if (name == "generic-tsv") return InputFormat::generic_tsv;
    throw ParameterError("unknown format '" + std::string(name) + "'");
}

std::string_view format_name(InputFormat format) {
    switch (format) {
        case InputFormat::movielens: return "movielens";
        case InputFormat::netflix: return "netflix";
        case InputFormat::facebook_wall: return "facebook-wall";
        case InputFormat::generic_tsv: return "generic-tsv";
    }
    return "?";
}

DedupPolicy parse_dedup(std::string_view name) {
    if (name == "earliest") return DedupPolicy::earliest;
    if (name == "keep-all") return DedupPolicy::keep_all;
    throw ParameterError("unknown dedup policy '" + std::string(name) + "'");
}

std::string_view dedup_name(DedupPolicy policy) {
    return policy == DedupPolicy::earliest ? "earliest" : "keep-all";
}

void IngestConfig::validate() const {
    if (rating_threshold < 0 || rating_threshold > 5) {
        throw ParameterError("rating_threshold must lie in [0,5]");
    }
}

std::uint32_t IdMap::intern(const std::string& label) {
    auto [it, inserted] = index_.try_emplace(label, static_cast<std::uint32_t>(labels_.size()));
    if (inserted) labels_.push_back(label);
    return it->second;
}

std::optional<std::uint32_t> IdMap::find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

IngestResult parse(std::istream& in, const IngestConfig& config) {
    config.validate();
    IngestResult result;
    RowReader reader(config, result.counters);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) reader.feed(line, ++line_no);
    if (in.bad()) throw IoError("read error");
    auto records = reader.take();
    if (records.empty()) throw EmptyDatasetError("no edges left after filtering");

    const bool day_indexed = config.format == InputFormat::generic_tsv;
    std::int64_t first = records.front().time;
    for (const auto& r : records) first = std::min(first, r.time);

    struct Pending {
        UserId user;
        ObjectId object;
        std::int64_t day;
        std::size_t order;
    };
    std::vector<Pending> pending;
    pending.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        const std::int64_t day = day_indexed ? r.time : (r.time - first) / kSecondsPerDay;
        if (day > std::numeric_limits<Day>::max()) throw ParseError(r.line, "day index overflow");
        pending.push_back({result.users.intern(r.user), result.objects.intern(r.object), day, i});
    }

    if (config.dedup == DedupPolicy::earliest) {
        // Earliest day per pair; the first row in input order wins ties.
        std::unordered_map<std::uint64_t, std::size_t> best;
        best.reserve(pending.size());
        for (std::size_t i = 0; i < pending.size(); ++i) {
            const auto key = (std::uint64_t{pending[i].user} << 32) | pending[i].object;
            auto [it, inserted] = best.try_emplace(key, i);
            if (!inserted && pending[i].day < pending[it->second].day) it->second = i;
        }
        std::vector<Pending> kept;
        kept.reserve(best.size());
        for (std::size_t i = 0; i < pending.size(); ++i) {
            const auto key = (std::uint64_t{pending[i].user} << 32) | pending[i].object;
            if (best.at(key) == i) kept.push_back(pending[i]);
        }
        result.counters.dropped_duplicate = pending.size() - kept.size();
        pending = std::move(kept);
    }

    std::stable_sort(pending.begin(), pending.end(),
                     [](const Pending& a, const Pending& b) { return a.day < b.day; });
    result.edges.reserve(pending.size());
    for (const auto& p : pending) {
        result.edges.push_back({p.user, p.object, static_cast<Day>(p.day)});
    }
    return result;
}

IngestResult parse_file(const std::filesystem::path& path, const IngestConfig& config) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    return parse(in, config);
}

StatsSummary dataset_stats(const std::vector<TemporalEdge>& edges) {
    if (edges.empty()) throw ParameterError("dataset_stats: empty edge list");
    std::unordered_set<UserId> users;
    std::unordered_set<ObjectId> objects;
    StatsSummary s;
    s.first_day = edges.front().day;
    s.last_day = edges.front().day;
    for (const auto& e : edges) {
        users.insert(e.user);
        objects.insert(e.object);
        s.first_day = std::min(s.first_day, e.day);
        s.last_day = std::max(s.last_day, e.day);
    }
    s.users = users.size();
    s.objects = objects.size();
    s.links = edges.size();
    return s;
}

IngestResult subsample_users(const IngestResult& data, std::size_t min_links,
                             std::size_t target_users, std::uint64_t seed) {
    std::vector<std::size_t> links_per_user(data.users.size(), 0);
    for (const auto& e : data.edges) ++links_per_user[e.user];
    std::vector<UserId> eligible;
    for (UserId u = 0; u < links_per_user.size(); ++u) {
        if (links_per_user[u] >= min_links) eligible.push_back(u);
    }
    if (eligible.size() < target_users) {
        throw ParameterError("only " + std::to_string(eligible.size()) + " users have >= " +
                             std::to_string(min_links) + " links");
    }
    Rng rng(seed);
    const auto picks = sample_without_replacement(
        rng, 0, static_cast<std::int64_t>(eligible.size()) - 1, target_users);
    std::vector<bool> keep(data.users.size(), false);
    for (auto p : picks) keep[eligible[static_cast<std::size_t>(p)]] = true;

    IngestResult out;
    out.counters = data.counters;
    for (const auto& e : data.edges) {
        if (!keep[e.user]) continue;
        const auto u = out.users.intern(data.users.label(e.user));
        const auto o = out.objects.intern(data.objects.label(e.object));
        out.edges.push_back({u, o, e.day});
    }
    return out;
}

void write_edges_tsv(std::ostream& out, const std::vector<TemporalEdge>& edges) {
    for (const auto& e : edges) out << e.user << '\t' << e.object << '\t' << e.day << '\n';
}

void write_id_map(std::ostream& out, const IdMap& map) {
    for (std::size_t i = 0; i < map.size(); ++i) out << i << '\t' << map.labels()[i] << '\n';
}

}  // namespace trendcast
