#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "trendcast/types.hpp"

namespace trendcast {

enum class InputFormat {
    movielens,      ///< `u::m::r::ts` (GroupLens) or whitespace `u m r ts` (KONECT)
    netflix,        ///< Netflix Prize `M:` blocks of `cust,rating,YYYY-MM-DD`, or whitespace `u m r ts`
    facebook_wall,  ///< KONECT wall posts: `poster owner [weight] ts`, `%` comments
    generic_tsv,    ///< `user<TAB>object<TAB>day[<TAB>rating]`, `#` comments, day used as-is
};

enum class DedupPolicy { earliest, keep_all };

InputFormat parse_format(std::string_view name);
std::string_view format_name(InputFormat format);
DedupPolicy parse_dedup(std::string_view name);
std::string_view dedup_name(DedupPolicy policy);

struct IngestConfig {
    InputFormat format = InputFormat::generic_tsv;
    /// Rated records are kept only when rating > rating_threshold.
    int rating_threshold = 2;
    DedupPolicy dedup = DedupPolicy::earliest;
    /// Only consulted for facebook_wall: drop posts on the poster's own wall.
    bool remove_self_loops = true;

    void validate() const;
};

/// Bidirectional mapping between original string labels and dense ids.
class IdMap {
public:
    std::uint32_t intern(const std::string& label);
    std::optional<std::uint32_t> find(const std::string& label) const;
    const std::string& label(std::uint32_t id) const { return labels_.at(id); }
    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::uint32_t> index_;
};

struct IngestCounters {
    std::size_t rows = 0;               ///< data rows seen (comments and blanks excluded)
    std::size_t dropped_rating = 0;     ///< rating <= threshold
    std::size_t dropped_self_loop = 0;  ///< facebook poster == owner
    std::size_t dropped_duplicate = 0;  ///< later repeats of a (user, object) pair
};

struct IngestResult {
    /// Sorted by day ascending, stable by input order within a day.
    std::vector<TemporalEdge> edges;
    IdMap users;
    IdMap objects;
    IngestCounters counters;
};

/// Parse a raw dataset into canonical edges.
///
/// Epoch-second and calendar-date timestamps become
/// floor((ts - first_ts) / 86400) with first_ts the earliest surviving record;
/// generic-tsv days are taken verbatim. Dense ids are assigned in order of
/// first appearance among surviving rows. Throws ParseError on a malformed
/// row and EmptyDatasetError when every row was filtered out.
IngestResult parse(std::istream& in, const IngestConfig& config);
IngestResult parse_file(const std::filesystem::path& path, const IngestConfig& config);

struct StatsSummary {
    std::size_t users = 0;
    std::size_t objects = 0;
    std::size_t links = 0;
    Day first_day = 0;
    Day last_day = 0;
};

StatsSummary dataset_stats(const std::vector<TemporalEdge>& edges);

/// Seeded user subsample: keep `target_users` users drawn uniformly from those
/// with at least `min_links` links, together with all their links. Ids are
/// re-densified in order of first appearance.
IngestResult subsample_users(const IngestResult& data, std::size_t min_links,
                             std::size_t target_users, std::uint64_t seed);

/// Canonical edge TSV: `user_id<TAB>object_id<TAB>day`, one edge per line.
void write_edges_tsv(std::ostream& out, const std::vector<TemporalEdge>& edges);
/// Id-map sidecar: `dense_id<TAB>label`, ascending dense id.
void write_id_map(std::ostream& out, const IdMap& map);

}  // namespace trendcast
