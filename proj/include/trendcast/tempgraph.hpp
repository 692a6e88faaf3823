#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "trendcast/types.hpp"

namespace trendcast {

class Snapshot;

/// Immutable temporal bipartite graph.
///
/// Links are stored per object as day arrays sorted ascending (CSR layout),
/// with a mirrored per-user index. Snapshot A(t) holds the links with
/// day <= t; the future window after t is (t, t + T_F]. Every degree query is
/// a binary search over one object's (or user's) day array.
class TemporalGraph {
public:
    TemporalGraph() = default;

    /// Builds from edges in any order. Object and user counts are max id + 1
    /// unless larger counts are given. Throws ParameterError on an empty list.
    static TemporalGraph from_edges(std::span<const TemporalEdge> edges, std::size_t num_users = 0,
                                    std::size_t num_objects = 0);

    std::size_t num_users() const noexcept { return user_offsets_.empty() ? 0 : user_offsets_.size() - 1; }
    std::size_t num_objects() const noexcept {
        return object_offsets_.empty() ? 0 : object_offsets_.size() - 1;
    }
    std::size_t num_links() const noexcept { return object_days_.size(); }
    Day day_min() const noexcept { return day_min_; }
    Day day_max() const noexcept { return day_max_; }

    /// k_alpha(t): links of `object` with day <= t.
    std::size_t degree_object(ObjectId object, Day t) const;
    /// k_i(t): links of `user` with day <= t.
    std::size_t degree_user(UserId user, Day t) const;
    /// Delta k_alpha(t, window): links with day in (t, t + window]. Requires
    /// window >= 0 and t + window <= day_max.
    std::size_t popularity_increase(ObjectId object, Day t, Day window) const;
    /// Days of `object`'s links with day <= t, ascending.
    std::span<const Day> link_days(ObjectId object, Day t) const;
    /// Every link day of `object`, ascending.
    std::span<const Day> link_days(ObjectId object) const;
    /// Users matching link_days(object), in the same order.
    std::span<const UserId> link_users(ObjectId object) const;
    /// Day of the object's earliest link.
    Day first_day(ObjectId object) const;
    /// Objects with at least one link on or before t, ascending id.
    /// Requires day_min <= t <= day_max.
    std::vector<ObjectId> candidates(Day t) const;

    Snapshot snapshot(Day t) const;

    /// Edges ordered by (object, day, user).
    std::vector<TemporalEdge> edges() const;

    /// Little-endian binary layout documented in docs/formats.md.
    void save(std::ostream& out) const;
    static TemporalGraph load(std::istream& in);
    void save_file(const std::filesystem::path& path) const;
    static TemporalGraph load_file(const std::filesystem::path& path);
    /// True when the stream starts with the binary graph magic. Does not consume input.
    static bool has_binary_magic(std::istream& in);

private:
    void check_object(ObjectId object) const;

    std::vector<std::size_t> object_offsets_;
    std::vector<Day> object_days_;
    std::vector<UserId> object_users_;
    std::vector<std::size_t> user_offsets_;
    std::vector<Day> user_days_;
    Day day_min_ = 0;
    Day day_max_ = 0;
};

/// Read-only view of the graph cut at day t. Predictors only ever see a
/// Snapshot, so no query can reach a link after the cut.
class Snapshot {
public:
    Snapshot(const TemporalGraph& graph, Day t);

    Day cut() const noexcept { return t_; }
    Day day_min() const noexcept { return graph_->day_min(); }
    std::size_t num_objects() const noexcept { return graph_->num_objects(); }

    std::size_t degree(ObjectId object) const { return graph_->degree_object(object, t_); }
    /// k_alpha(s) for an earlier day s <= t. Throws ParameterError for s > t.
    std::size_t degree_at(ObjectId object, Day s) const;
    std::span<const Day> link_days(ObjectId object) const { return graph_->link_days(object, t_); }
    std::vector<ObjectId> candidates() const { return graph_->candidates(t_); }

private:
    const TemporalGraph* graph_;
    Day t_;
};

}  // namespace trendcast
