#include <doctest.h>

#include <map>
#include <sstream>

#include "fixtures.hpp"
#include "trendcast/ingest.hpp"

using namespace trendcast;

namespace {

IngestResult parse_text(const std::string& text, IngestConfig config) {
    std::istringstream in(text);
    return parse(in, config);
}

IngestConfig config_for(InputFormat f) {
    IngestConfig c;
    c.format = f;
    return c;
}

}  // namespace

TEST_CASE("movielens rows with rating at or below the threshold are dropped") {
    // u1 rates m9 with 2 on day 40 (relative to the u2 row at t=0): not a link.
    const std::string text =
        "u2::m1::4::1000\n"
        "u1::m9::2::" + std::to_string(1000 + 40 * 86400) + "\n"
        "u1::m8::3::" + std::to_string(1000 + 40 * 86400 + 5) + "\n";
    const auto r = parse_text(text, config_for(InputFormat::movielens));
    REQUIRE(r.edges.size() == 2);
    CHECK(r.counters.dropped_rating == 1);
    CHECK_FALSE(r.objects.find("m9").has_value());
    CHECK(r.edges[1].day == 40);
    CHECK(r.objects.label(r.edges[1].object) == "m8");
}

TEST_CASE("movielens accepts KONECT whitespace rows and half-star ratings") {
    const std::string text =
        "% bip unweighted\n"
        "1 10 2.5 86400\n"
        "1 11 4 0\n"
        "2 10 5 172800\n";
    const auto r = parse_text(text, config_for(InputFormat::movielens));
    REQUIRE(r.edges.size() == 3);
    CHECK(r.edges[0].day == 0);
    CHECK(r.edges[1].day == 1);
    CHECK(r.edges[2].day == 2);
    IngestConfig strict = config_for(InputFormat::movielens);
    strict.rating_threshold = 3;
    CHECK(parse_text(text, strict).edges.size() == 2);
}

TEST_CASE("facebook wall posts on one's own wall are dropped") {
    const std::string text =
        "% sym positive\n"
        "u7 u7 1 " + std::to_string(12 * 86400) + "\n"
        "u7 u8 1 0\n"
        "u8 u7 1 86400\n";
    const auto r = parse_text(text, config_for(InputFormat::facebook_wall));
    CHECK(r.edges.size() == 2);
    CHECK(r.counters.dropped_self_loop == 1);

    // Bipartite: u7 is both a poster (user) and a wall (object), with independent ids.
    REQUIRE(r.users.find("u7").has_value());
    REQUIRE(r.objects.find("u7").has_value());
    CHECK(r.edges[0].user == *r.users.find("u7"));
    CHECK(r.edges[0].object == *r.objects.find("u8"));

    IngestConfig keep = config_for(InputFormat::facebook_wall);
    keep.remove_self_loops = false;
    CHECK(parse_text(text, keep).edges.size() == 3);
}

TEST_CASE("facebook three-column rows carry the timestamp last") {
    const auto r = parse_text("a b 100\nb a 86500\n", config_for(InputFormat::facebook_wall));
    REQUIRE(r.edges.size() == 2);
    CHECK(r.edges[1].day == 1);
}

TEST_CASE("generic-tsv dedup keeps the earliest day") {
    const std::string text = "a\tx\t3\na\tx\t1\n";
    const auto r = parse_text(text, config_for(InputFormat::generic_tsv));
    REQUIRE(r.edges.size() == 1);
    CHECK(r.edges[0] == TemporalEdge{0, 0, 1});
    CHECK(r.counters.dropped_duplicate == 1);

    IngestConfig all = config_for(InputFormat::generic_tsv);
    all.dedup = DedupPolicy::keep_all;
    const auto k = parse_text(text, all);
    REQUIRE(k.edges.size() == 2);
    CHECK(k.edges[0].day == 1);
    CHECK(k.edges[1].day == 3);
}

TEST_CASE("generic-tsv days are used verbatim and ordering is stable within a day") {
    const std::string text =
        "# comment\n"
        "u1\to1\t5\n"
        "u2\to2\t2\n"
        "u3\to3\t5\n"
        "\n"
        "u4\to4\t2\n";
    const auto r = parse_text(text, config_for(InputFormat::generic_tsv));
    REQUIRE(r.edges.size() == 4);
    std::vector<std::string> order;
    for (const auto& e : r.edges) order.push_back(r.users.label(e.user));
    CHECK(order == std::vector<std::string>{"u2", "u4", "u1", "u3"});
    CHECK(r.edges.front().day == 2);
}

TEST_CASE("generic-tsv applies the rating filter when a rating column is present") {
    const auto r = parse_text("a\tx\t0\t2\nb\tx\t1\t3\n", config_for(InputFormat::generic_tsv));
    REQUIRE(r.edges.size() == 1);
    CHECK(r.users.label(r.edges[0].user) == "b");
}

TEST_CASE("netflix prize blocks with calendar dates") {
    const std::string text =
        "1:\n"
        "100,3,2005-09-06\n"
        "101,1,2005-09-07\n"
        "2:\n"
        "100,5,2005-09-08\n";
    const auto r = parse_text(text, config_for(InputFormat::netflix));
    REQUIRE(r.edges.size() == 2);
    CHECK(r.edges[0].day == 0);
    CHECK(r.edges[1].day == 2);
    CHECK(r.objects.label(r.edges[1].object) == "2");
}

TEST_CASE("epoch seconds map to floor of elapsed days") {
    const std::string text = "a b 1000\nc d " + std::to_string(1000 + 2 * 86400 - 1) + "\n";
    const auto r = parse_text(text, config_for(InputFormat::facebook_wall));
    CHECK(r.edges[1].day == 1);
}

TEST_CASE("malformed rows report their line number") {
    const std::string text = "a\tx\t1\n# ok\nb\ty\n";
    try {
        parse_text(text, config_for(InputFormat::generic_tsv));
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_text("a\tx\tday\n", config_for(InputFormat::generic_tsv)), ParseError);
    CHECK_THROWS_AS(parse_text("a::b::7::100\n", config_for(InputFormat::movielens)), ParseError);
    CHECK_THROWS_AS(parse_text("100,3,2005-09-06\n", config_for(InputFormat::netflix)), ParseError);
    CHECK_THROWS_AS(parse_text("a b 1 2005-13-01\n", config_for(InputFormat::facebook_wall)),
                    ParseError);
}

TEST_CASE("empty output after filtering is an explicit error") {
    CHECK_THROWS_AS(parse_text("u::m::1::0\nu::n::2::5\n", config_for(InputFormat::movielens)),
                    EmptyDatasetError);
    CHECK_THROWS_AS(parse_text("# only comments\n", config_for(InputFormat::generic_tsv)),
                    EmptyDatasetError);
    CHECK_THROWS_AS(parse_text("a a 1 5\n", config_for(InputFormat::facebook_wall)),
                    EmptyDatasetError);
}

TEST_CASE("rating threshold is validated") {
    IngestConfig c;
    c.rating_threshold = 6;
    CHECK_THROWS_AS(c.validate(), ParameterError);
}

TEST_CASE("missing file is an IoError") {
    CHECK_THROWS_AS(parse_file("/nonexistent/file.tsv", IngestConfig{}), IoError);
}

TEST_CASE("parsing is deterministic and dedup keeps the minimum day per pair") {
    Rng rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        std::ostringstream text;
        std::map<std::pair<int, int>, int> expected;  // oracle: min day per pair
        for (int i = 0; i < 300; ++i) {
            const int u = static_cast<int>(rng.below(15));
            const int o = static_cast<int>(rng.below(10));
            const int d = static_cast<int>(rng.below(50));
            text << 'u' << u << "\to" << o << '\t' << d << '\n';
            auto [it, inserted] = expected.try_emplace({u, o}, d);
            if (!inserted) it->second = std::min(it->second, d);
        }
        const auto a = parse_text(text.str(), IngestConfig{});
        const auto b = parse_text(text.str(), IngestConfig{});
        CHECK(a.edges == b.edges);
        CHECK(a.users.labels() == b.users.labels());
        REQUIRE(a.edges.size() == expected.size());
        for (std::size_t i = 0; i < a.edges.size(); ++i) {
            const auto& e = a.edges[i];
            const int u = std::stoi(a.users.label(e.user).substr(1));
            const int o = std::stoi(a.objects.label(e.object).substr(1));
            CHECK(expected.at({u, o}) == e.day);
            if (i > 0) CHECK(a.edges[i - 1].day <= e.day);
        }
    }
}

TEST_CASE("dataset_stats") {
    SUBCASE("single edge") {
        const auto s = dataset_stats({{0, 0, 0}});
        CHECK(s.users == 1);
        CHECK(s.objects == 1);
        CHECK(s.links == 1);
        CHECK(s.first_day == 0);
        CHECK(s.last_day == 0);
    }
    SUBCASE("three edges over two users and two objects") {
        // users {0, 1}, objects {0, 1}, days 2..9
        const auto s = dataset_stats({{0, 0, 4}, {1, 0, 2}, {1, 1, 9}});
        CHECK(s.users == 2);
        CHECK(s.objects == 2);
        CHECK(s.links == 3);
        CHECK(s.first_day == 2);
        CHECK(s.last_day == 9);
    }
    CHECK_THROWS_AS(dataset_stats({}), ParameterError);
}

TEST_CASE("seeded user subsample keeps whole users above the link floor") {
    std::ostringstream text;
    for (int u = 0; u < 40; ++u) {
        const int links = u % 2 == 0 ? 25 : 5;
        for (int o = 0; o < links; ++o) text << 'u' << u << "\to" << o << '\t' << o << '\n';
    }
    const auto data = parse_text(text.str(), IngestConfig{});
    const auto a = subsample_users(data, 20, 10, 3);
    const auto b = subsample_users(data, 20, 10, 3);
    CHECK(a.edges == b.edges);
    CHECK(a.users.size() == 10);
    CHECK(a.edges.size() == 250);
    for (const auto& label : a.users.labels()) CHECK(std::stoi(label.substr(1)) % 2 == 0);
    CHECK_THROWS_AS(subsample_users(data, 20, 21, 3), ParameterError);
}

TEST_CASE("canonical TSV and id-map layout") {
    const auto r = parse_text("alice\tbook\t4\nbob\tbook\t6\n", IngestConfig{});
    std::ostringstream edges, users;
    write_edges_tsv(edges, r.edges);
    write_id_map(users, r.users);
    CHECK(edges.str() == "0\t0\t4\n1\t0\t6\n");
    CHECK(users.str() == "0\talice\n1\tbob\n");
}
