#include <doctest.h>

#include <numeric>
#include <sstream>

#include "fixtures.hpp"
#include "trendcast/tempgraph.hpp"

using namespace trendcast;
using trendcast::testing::random_edges;
using trendcast::testing::small_fixture;

TEST_CASE("degree_object on the {3, 7, 20} object") {
    const auto g = TemporalGraph::from_edges(small_fixture());
    CHECK(g.degree_object(0, 7) == 2);
    CHECK(g.degree_object(0, g.day_max()) == 3);
    CHECK(g.degree_object(0, 2) == 0);
    CHECK(g.degree_object(3, 14) == 0);
    CHECK_THROWS_AS(g.degree_object(4, 10), ParameterError);
}

TEST_CASE("popularity_increase counts the half-open window (t, t + T_F]") {
    const auto g = TemporalGraph::from_edges(small_fixture());
    CHECK(g.popularity_increase(0, 7, 13) == 1);
    CHECK(g.popularity_increase(0, 8, 5) == 0);
    CHECK(g.popularity_increase(0, 0, 25) == 3);
    CHECK(g.popularity_increase(0, 7, 0) == 0);
    CHECK(g.popularity_increase(0, 7, 13) == g.degree_object(0, 20) - g.degree_object(0, 7));
    CHECK_THROWS_AS(g.popularity_increase(0, 20, 6), ParameterError);
    CHECK_THROWS_AS(g.popularity_increase(9, 0, 1), ParameterError);
}

TEST_CASE("link_days") {
    const auto g = TemporalGraph::from_edges(small_fixture());
    const auto d = g.link_days(0, 7);
    CHECK(std::vector<Day>(d.begin(), d.end()) == std::vector<Day>{3, 7});
    CHECK(g.link_days(0, 2).empty());
    CHECK(g.link_days(0, g.day_max()).size() == 3);
    CHECK_THROWS_AS(g.link_days(7, 1), ParameterError);
}

TEST_CASE("candidates") {
    const auto g = TemporalGraph::from_edges(small_fixture());
    CHECK(g.candidates(0) == std::vector<ObjectId>{1});
    // Hand enumeration: first days are 3, 0, 9, 15.
    CHECK(g.candidates(8) == std::vector<ObjectId>{0, 1});
    CHECK(g.candidates(9) == std::vector<ObjectId>{0, 1, 2});
    CHECK(g.candidates(g.day_max()) == std::vector<ObjectId>{0, 1, 2, 3});
    CHECK_THROWS_AS(g.candidates(-1), ParameterError);
    CHECK_THROWS_AS(g.candidates(26), ParameterError);
}

TEST_CASE("graph counts and user degrees") {
    const auto g = TemporalGraph::from_edges(small_fixture());
    CHECK(g.num_objects() == 4);
    CHECK(g.num_users() == 5);
    CHECK(g.num_links() == 11);
    CHECK(g.day_min() == 0);
    CHECK(g.day_max() == 25);
    CHECK(g.degree_user(0, 25) == 3);
    CHECK(g.degree_user(0, 2) == 1);
    CHECK(g.first_day(2) == 9);
    CHECK_THROWS_AS(TemporalGraph::from_edges(std::vector<TemporalEdge>{}), ParameterError);
}

TEST_CASE("snapshot refuses queries past its cut") {
    const auto g = TemporalGraph::from_edges(small_fixture());
    const auto s = g.snapshot(10);
    CHECK(s.degree(0) == 2);
    CHECK(s.degree_at(0, 5) == 1);
    CHECK_THROWS_AS(s.degree_at(0, 11), ParameterError);
    CHECK(s.link_days(0).size() == 2);
    CHECK_THROWS_AS(g.snapshot(30), ParameterError);
}

TEST_CASE("snapshot invariants on random graphs") {
    Rng rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        const auto edges = random_edges(rng, 30, 20, 200, 60);
        const auto g = TemporalGraph::from_edges(edges);
        for (Day t = g.day_min(); t <= g.day_max(); ++t) {
            // Handshake identity: object degrees, user degrees and edge count agree.
            std::size_t by_object = 0, by_user = 0, by_edge = 0;
            for (ObjectId a = 0; a < g.num_objects(); ++a) by_object += g.degree_object(a, t);
            for (UserId u = 0; u < g.num_users(); ++u) by_user += g.degree_user(u, t);
            for (const auto& e : edges) by_edge += e.day <= t ? 1 : 0;
            CHECK(by_object == by_edge);
            CHECK(by_user == by_edge);
        }
        for (ObjectId a = 0; a < g.num_objects(); ++a) {
            for (Day t = g.day_min(); t < g.day_max(); ++t) {
                CHECK(g.degree_object(a, t) <= g.degree_object(a, t + 1));
            }
            // Window additivity.
            for (Day t = 0; t + 20 <= g.day_max(); t += 7) {
                for (Day w1 = 0; w1 <= 10; w1 += 3) {
                    const Day w2 = 20 - w1;
                    CHECK(g.popularity_increase(a, t, w1) + g.popularity_increase(a, t + w1, w2) ==
                          g.popularity_increase(a, t, w1 + w2));
                }
            }
        }
    }
}

TEST_CASE("construction is invariant to edge order") {
    Rng rng(5);
    auto edges = random_edges(rng, 25, 15, 150, 40);
    const auto reference = TemporalGraph::from_edges(edges).edges();
    for (int trial = 0; trial < 10; ++trial) {
        for (std::size_t i = edges.size(); i > 1; --i) {
            std::swap(edges[i - 1], edges[rng.below(i)]);
        }
        CHECK(TemporalGraph::from_edges(edges).edges() == reference);
    }
}

TEST_CASE("binary serialization") {
    const auto g = TemporalGraph::from_edges(small_fixture());
    std::stringstream buf;
    g.save(buf);
    const auto bytes = buf.str();
    // 8 magic + 4 version + 4 users + 4 objects + 8 links + 4 + 4 days, then 12 bytes per link.
    REQUIRE(bytes.size() == 36 + 12 * 11);
    CHECK(bytes.substr(0, 8) == std::string("TCGRAPH\0", 8));
    CHECK(bytes.substr(8, 4) == std::string("\x01\x00\x00\x00", 4));
    CHECK(bytes.substr(16, 4) == std::string("\x04\x00\x00\x00", 4));
    CHECK(bytes.substr(32, 4) == std::string("\x19\x00\x00\x00", 4));  // day_max = 25

    CHECK(TemporalGraph::has_binary_magic(buf));
    const auto h = TemporalGraph::load(buf);
    CHECK(h.edges() == g.edges());
    CHECK(h.num_users() == g.num_users());
    CHECK(h.day_max() == g.day_max());

    std::stringstream bad("not a graph at all");
    CHECK_FALSE(TemporalGraph::has_binary_magic(bad));
    CHECK_THROWS_AS(TemporalGraph::load(bad), IoError);
    std::stringstream truncated(bytes.substr(0, 50));
    CHECK_THROWS_AS(TemporalGraph::load(truncated), IoError);
}
