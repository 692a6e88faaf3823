#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "trendcast/synth.hpp"

using namespace trendcast;

TEST_CASE("one link on one day") {
    GrowthModel m;
    m.num_users = 3;
    m.num_objects = 2;
    m.links_per_day = 1;
    m.total_days = 1;
    const auto edges = generate(m);
    REQUIRE(edges.size() == 1);
    CHECK(edges[0].day == 0);
    CHECK(edges[0].object == 0);  // only object 0 is born on day 0
}

TEST_CASE("generation is deterministic and ordered by day") {
    GrowthModel m;
    m.num_users = 200;
    m.num_objects = 80;
    m.links_per_day = 20;
    m.total_days = 60;
    m.theta = 0.05;
    m.fitness = lognormal_fitness(m.num_objects, 0.7, 3);
    m.burst_rate = 0.05;
    m.burst_size = 5.0;
    m.burst_decay = 0.3;
    m.seed = 11;
    const auto a = generate(m);
    const auto b = generate(m);
    CHECK(a == b);
    CHECK(a.size() == m.links_per_day * m.total_days);
    for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].day <= a[i].day);
    // No repeated (user, object) pairs and no link before the object's birth.
    std::vector<bool> seen(m.num_users * m.num_objects, false);
    for (const auto& e : a) {
        CHECK_FALSE(seen[e.user * m.num_objects + e.object]);
        seen[e.user * m.num_objects + e.object] = true;
        CHECK(e.day >= m.birth_day(e.object));
    }
    m.seed = 12;
    CHECK(generate(m) != a);
}

TEST_CASE("invalid models are rejected") {
    GrowthModel m;
    m.num_users = 0;
    CHECK_THROWS_AS(generate(m), ParameterError);
    m = GrowthModel{};
    m.theta = -0.1;
    CHECK_THROWS_AS(generate(m), ParameterError);
    m = GrowthModel{};
    m.fitness = {1.0, 2.0};
    CHECK_THROWS_AS(generate(m), ParameterError);
    m = GrowthModel{};
    m.burst_rate = 1.5;
    CHECK_THROWS_AS(generate(m), ParameterError);
}

TEST_CASE("pure preferential attachment favours the earliest objects") {
    // 100 seeded runs; the top object at the end should be early-born far more
    // often than the 1 in 10 a uniform pick would give.
    int early = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        GrowthModel m;
        m.num_users = 500;
        m.num_objects = 100;
        m.links_per_day = 10;
        m.total_days = 100;
        m.seed = seed;
        std::vector<std::size_t> degree(m.num_objects, 0);
        for (const auto& e : generate(m)) ++degree[e.object];
        const auto top = std::max_element(degree.begin(), degree.end()) - degree.begin();
        if (top < 10) ++early;
    }
    CHECK(early >= 50);
}

TEST_CASE("pure preferential attachment gives a heavy tail") {
    GrowthModel m;
    m.num_users = 5000;
    m.num_objects = 400;
    m.links_per_day = 50;
    m.total_days = 200;
    m.seed = 9;
    std::vector<double> degree(m.num_objects, 0.0);
    for (const auto& e : generate(m)) degree[e.object] += 1.0;
    const double mean = std::accumulate(degree.begin(), degree.end(), 0.0) / degree.size();
    CHECK(*std::max_element(degree.begin(), degree.end()) > 5.0 * mean);
}

TEST_CASE("fast aging concentrates links on newborn objects") {
    GrowthModel m;
    m.num_users = 2000;
    m.num_objects = 300;
    m.links_per_day = 5;
    m.total_days = 300;
    m.theta = 5.0;
    m.seed = 4;
    const auto edges = generate(m);
    double age = 0.0;
    for (const auto& e : edges) age += e.day - m.birth_day(e.object);
    CHECK(age / static_cast<double>(edges.size()) < 2.0);
}

TEST_CASE("lognormal fitness") {
    const auto f = lognormal_fitness(20000, 1.0, 5);
    CHECK(f == lognormal_fitness(20000, 1.0, 5));
    double log_mean = 0.0, log_sq = 0.0;
    for (double x : f) {
        CHECK(x > 0.0);
        log_mean += std::log(x);
        log_sq += std::log(x) * std::log(x);
    }
    log_mean /= f.size();
    const double sd = std::sqrt(log_sq / f.size() - log_mean * log_mean);
    CHECK(std::abs(log_mean) < 0.03);
    CHECK(std::abs(sd - 1.0) < 0.03);
    for (double x : lognormal_fitness(10, 0.0, 5)) CHECK(x == 1.0);
}

TEST_CASE("brute-force oracles on the three-object example") {
    TrueFutureRanking truth;
    truth.objects = {0, 1, 2};
    truth.increase = {5, 1, 0};
    truth.ranking = RankedList(truth.objects, std::vector<double>{5.0, 1.0, 0.0});
    ScoreTable s;
    s.objects = {0, 1, 2};
    s.scores = {3.0, 1.0, 3.0};
    CHECK(brute_force_auc(s, truth, 1) == 0.75);
    s.scores = {1.0, 1.0, 1.0};
    CHECK(brute_force_auc(s, truth, 1) == 0.5);
    s.scores = {0.0, 1.0, 2.0};
    CHECK(brute_force_auc(s, truth, 1) == 0.0);
    CHECK_THROWS_AS(brute_force_auc(s, truth, 3), ParameterError);
}

TEST_CASE("brute-force scores straight from edges") {
    const std::vector<TemporalEdge> edges{{0, 0, 7}, {1, 0, 9}, {0, 1, 10}, {1, 1, 2}};
    const auto t = brute_force_scores(edges, 10, PredictorSpec::tbp(0.5));
    REQUIRE(t.objects == std::vector<ObjectId>{0, 1});
    CHECK(t.scores[0] == doctest::Approx(std::exp(-1.5) + std::exp(-0.5)).epsilon(1e-15));
    const auto p = brute_force_scores(edges, 9, PredictorSpec::pbp(3, 0.5));
    // object 0: k=2, k(6)=0; object 1: k=1, k(6)=1
    CHECK(p.objects == std::vector<ObjectId>{0, 1});
    CHECK(p.scores == std::vector<double>{2.0, 0.5});
}
