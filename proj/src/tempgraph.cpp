#include "trendcast/tempgraph.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>

namespace trendcast {

namespace {

constexpr std::array<char, 8> kMagic = {'T', 'C', 'G', 'R', 'A', 'P', 'H', '\0'};
constexpr std::uint32_t kFormatVersion = 1;

template <typename T>
void put_le(std::ostream& out, T value) {
    using U = std::make_unsigned_t<T>;
    auto u = static_cast<U>(value);
    std::array<char, sizeof(T)> bytes{};
    for (std::size_t i = 0; i < sizeof(T); ++i) {
        bytes[i] = static_cast<char>(u & 0xffu);
        u = static_cast<U>(u >> 8);
    }
    out.write(bytes.data(), bytes.size());
}

template <typename T>
T get_le(std::istream& in) {
    using U = std::make_unsigned_t<T>;
    std::array<unsigned char, sizeof(T)> bytes{};
    in.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
    if (!in) throw IoError("truncated binary graph");
    U u = 0;
    for (std::size_t i = sizeof(T); i-- > 0;) u = static_cast<U>((u << 8) | bytes[i]);
    return static_cast<T>(u);
}

// CSR over `key`, each bucket sorted by (day, secondary).
template <typename Key, typename Other>
void build_csr(std::span<const TemporalEdge> edges, std::size_t buckets, Key key, Other other,
               std::vector<std::size_t>& offsets, std::vector<Day>& days,
               std::vector<std::uint32_t>* partners) {
    offsets.assign(buckets + 1, 0);
    for (const auto& e : edges) ++offsets[key(e) + 1];
    std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
    std::vector<std::pair<Day, std::uint32_t>> slots(edges.size());
    auto cursor = offsets;
    for (const auto& e : edges) slots[cursor[key(e)]++] = {e.day, other(e)};
    for (std::size_t b = 0; b < buckets; ++b) {
        std::sort(slots.begin() + static_cast<std::ptrdiff_t>(offsets[b]),
                  slots.begin() + static_cast<std::ptrdiff_t>(offsets[b + 1]));
    }
    days.resize(slots.size());
    if (partners) partners->resize(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i) {
        days[i] = slots[i].first;
        if (partners) (*partners)[i] = slots[i].second;
    }
}

std::size_t count_upto(std::span<const Day> days, Day t) {
    return static_cast<std::size_t>(std::upper_bound(days.begin(), days.end(), t) - days.begin());
}

}  // namespace

TemporalGraph TemporalGraph::from_edges(std::span<const TemporalEdge> edges, std::size_t num_users,
                                        std::size_t num_objects) {
    if (edges.empty()) throw ParameterError("cannot build a graph from zero edges");
    TemporalGraph g;
    g.day_min_ = edges.front().day;
    g.day_max_ = edges.front().day;
    for (const auto& e : edges) {
        if (e.day < 0) throw ParameterError("negative day in edge list");
        num_users = std::max<std::size_t>(num_users, std::size_t{e.user} + 1);
        num_objects = std::max<std::size_t>(num_objects, std::size_t{e.object} + 1);
        g.day_min_ = std::min(g.day_min_, e.day);
        g.day_max_ = std::max(g.day_max_, e.day);
    }
    build_csr(
        edges, num_objects, [](const TemporalEdge& e) { return e.object; },
        [](const TemporalEdge& e) { return e.user; }, g.object_offsets_, g.object_days_,
        &g.object_users_);
    build_csr(
        edges, num_users, [](const TemporalEdge& e) { return e.user; },
        [](const TemporalEdge& e) { return e.object; }, g.user_offsets_, g.user_days_, nullptr);
    return g;
}

void TemporalGraph::check_object(ObjectId object) const {
    if (object >= num_objects()) {
        throw ParameterError("unknown object id " + std::to_string(object));
    }
}

std::span<const Day> TemporalGraph::link_days(ObjectId object) const {
    check_object(object);
    return std::span<const Day>(object_days_).subspan(
        object_offsets_[object], object_offsets_[object + 1] - object_offsets_[object]);
}

std::span<const Day> TemporalGraph::link_days(ObjectId object, Day t) const {
    const auto all = link_days(object);
    return all.first(count_upto(all, t));
}

std::span<const UserId> TemporalGraph::link_users(ObjectId object) const {
    check_object(object);
    return std::span<const UserId>(object_users_)
        .subspan(object_offsets_[object], object_offsets_[object + 1] - object_offsets_[object]);
}

Day TemporalGraph::first_day(ObjectId object) const {
    const auto days = link_days(object);
    if (days.empty()) throw ParameterError("object " + std::to_string(object) + " has no links");
    return days.front();
}

std::size_t TemporalGraph::degree_object(ObjectId object, Day t) const {
    return count_upto(link_days(object), t);
}

std::size_t TemporalGraph::degree_user(UserId user, Day t) const {
    if (user >= num_users()) throw ParameterError("unknown user id " + std::to_string(user));
    const auto days = std::span<const Day>(user_days_).subspan(
        user_offsets_[user], user_offsets_[user + 1] - user_offsets_[user]);
    return count_upto(days, t);
}

std::size_t TemporalGraph::popularity_increase(ObjectId object, Day t, Day window) const {
    if (window < 0) throw ParameterError("window length must be non-negative");
    if (static_cast<std::int64_t>(t) + window > day_max_) {
        throw ParameterError("window (" + std::to_string(t) + ", " + std::to_string(t + window) +
                             "] exceeds last day " + std::to_string(day_max_));
    }
    const auto days = link_days(object);
    return count_upto(days, t + window) - count_upto(days, t);
}

std::vector<ObjectId> TemporalGraph::candidates(Day t) const {
    if (t < day_min_ || t > day_max_) {
        throw ParameterError("day " + std::to_string(t) + " outside [" + std::to_string(day_min_) +
                             ", " + std::to_string(day_max_) + "]");
    }
    std::vector<ObjectId> out;
    for (ObjectId a = 0; a < num_objects(); ++a) {
        const auto begin = object_offsets_[a];
        if (begin != object_offsets_[a + 1] && object_days_[begin] <= t) out.push_back(a);
    }
    return out;
}

Snapshot TemporalGraph::snapshot(Day t) const { return Snapshot(*this, t); }

std::vector<TemporalEdge> TemporalGraph::edges() const {
    std::vector<TemporalEdge> out;
    out.reserve(num_links());
    for (ObjectId a = 0; a < num_objects(); ++a) {
        for (auto i = object_offsets_[a]; i < object_offsets_[a + 1]; ++i) {
            out.push_back({object_users_[i], a, object_days_[i]});
        }
    }
    return out;
}

void TemporalGraph::save(std::ostream& out) const {
    out.write(kMagic.data(), kMagic.size());
    put_le<std::uint32_t>(out, kFormatVersion);
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(num_users()));
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(num_objects()));
    put_le<std::uint64_t>(out, num_links());
    put_le<std::int32_t>(out, day_min_);
    put_le<std::int32_t>(out, day_max_);
    for (const auto& e : edges()) {
        put_le<std::uint32_t>(out, e.user);
        put_le<std::uint32_t>(out, e.object);
        put_le<std::int32_t>(out, e.day);
    }
    if (!out) throw IoError("write error while saving graph");
}

bool TemporalGraph::has_binary_magic(std::istream& in) {
    std::array<char, kMagic.size()> head{};
    const auto pos = in.tellg();
    in.read(head.data(), head.size());
    const bool match = in.gcount() == static_cast<std::streamsize>(head.size()) && head == kMagic;
    in.clear();
    in.seekg(pos);
    return match;
}

TemporalGraph TemporalGraph::load(std::istream& in) {
    std::array<char, kMagic.size()> head{};
    in.read(head.data(), head.size());
    if (!in || head != kMagic) throw IoError("not a trendcast binary graph");
    const auto version = get_le<std::uint32_t>(in);
    if (version != kFormatVersion) {
        throw IoError("unsupported binary graph version " + std::to_string(version));
    }
    const auto users = get_le<std::uint32_t>(in);
    const auto objects = get_le<std::uint32_t>(in);
    const auto links = get_le<std::uint64_t>(in);
    const auto day_min = get_le<std::int32_t>(in);
    const auto day_max = get_le<std::int32_t>(in);
    std::vector<TemporalEdge> edges;
    edges.reserve(links);
    for (std::uint64_t i = 0; i < links; ++i) {
        TemporalEdge e;
        e.user = get_le<std::uint32_t>(in);
        e.object = get_le<std::uint32_t>(in);
        e.day = get_le<std::int32_t>(in);
        if (e.user >= users || e.object >= objects) throw IoError("binary graph id out of range");
        edges.push_back(e);
    }
    auto g = from_edges(edges, users, objects);
    if (g.day_min_ != day_min || g.day_max_ != day_max) {
        throw IoError("binary graph header day range does not match its edges");
    }
    return g;
}

void TemporalGraph::save_file(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    save(out);
}

TemporalGraph TemporalGraph::load_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    return load(in);
}

Snapshot::Snapshot(const TemporalGraph& graph, Day t) : graph_(&graph), t_(t) {
    if (t < graph.day_min() || t > graph.day_max()) {
        throw ParameterError("snapshot day " + std::to_string(t) + " outside [" +
                             std::to_string(graph.day_min()) + ", " +
                             std::to_string(graph.day_max()) + "]");
    }
}

std::size_t Snapshot::degree_at(ObjectId object, Day s) const {
    if (s > t_) {
        throw ParameterError("degree_at(" + std::to_string(s) + ") looks past snapshot day " +
                             std::to_string(t_));
    }
    return graph_->degree_object(object, s);
}

}  // namespace trendcast
