#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "rankgraph/rank_model.hpp"

using namespace rankgraph;

TEST_CASE("lowest sum ranks first") {
    auto model = RankModel::from_cost(5, [](NodeId u, NodeId v) { return double(u + v); });
    CHECK(model.at(1) == NodePair{0, 1});
    CHECK(model.rank_of({0, 1}) == 1);
    CHECK(model.pair_count() == 10);
}

TEST_CASE("base-n cost gives lexicographic order") {
    const std::uint32_t n = 4;
    auto model = RankModel::from_cost(n, [n](NodeId u, NodeId v) { return double(u * n + v); });
    // enumerate the 6 pairs sorted by 4u+v
    std::vector<NodePair> expected = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    CHECK(std::vector<NodePair>(model.order().begin(), model.order().end()) == expected);
    CHECK(model.rank_of({2, 3}) == 6);
}

TEST_CASE("all-ties order is reproducible and seed dependent") {
    auto zero = [](NodeId, NodeId) { return 0.0; };
    auto a = RankModel::from_cost(3, zero, SortDirection::Ascending, 11);
    auto b = RankModel::from_cost(3, zero, SortDirection::Ascending, 11);
    CHECK(std::equal(a.order().begin(), a.order().end(), b.order().begin()));

    // all 3! orders are reachable from some seed
    std::set<std::vector<NodePair>> seen;
    for (Seed s = 0; s < 200; ++s) {
        auto m = RankModel::from_cost(3, zero, SortDirection::Ascending, s);
        seen.insert(std::vector<NodePair>(m.order().begin(), m.order().end()));
    }
    CHECK(seen.size() == 6);
}

TEST_CASE("descending direction reverses unequal costs") {
    auto model = RankModel::from_cost(4, [](NodeId u, NodeId v) { return double(u * 4 + v); },
                                      SortDirection::Descending);
    CHECK(model.at(1) == NodePair{2, 3});
    CHECK(model.at(6) == NodePair{0, 1});
}

TEST_CASE("rank_of inverts order") {
    auto model = RankModel::from_cost(9, [](NodeId u, NodeId v) { return double((u * 7 + v * 3) % 5); },
                                      SortDirection::Ascending, 3);
    for (Rank r = 1; r <= model.pair_count(); ++r) {
        CHECK(model.rank_of(model.at(r)) == r);
    }
}

TEST_CASE("invalid pairs are rejected") {
    auto model = RankModel::from_cost(4, [](NodeId u, NodeId v) { return double(u + v); });
    CHECK_THROWS_AS(model.rank_of({2, 2}), InvalidPairError);
    CHECK_THROWS_AS(model.rank_of({3, 1}), InvalidPairError);
    CHECK_THROWS_AS(model.rank_of({1, 4}), InvalidPairError);
    CHECK_THROWS_AS(model.at(0), std::out_of_range);
    CHECK_THROWS_AS(model.at(7), std::out_of_range);
}

TEST_CASE("non-finite cost names the pair") {
    auto bad = [](NodeId u, NodeId v) {
        return (u == 1 && v == 2) ? std::numeric_limits<double>::quiet_NaN() : 0.0;
    };
    try {
        RankModel::from_cost(4, bad);
        FAIL("expected NonFiniteCostError");
    } catch (const NonFiniteCostError& e) {
        CHECK(e.pair == NodePair{1, 2});
        CHECK(std::string(e.what()).find("(1,2)") != std::string::npos);
    }
    CHECK_THROWS_AS(RankModel::from_cost(3, [](NodeId, NodeId) { return INFINITY; }), NonFiniteCostError);
    CHECK_THROWS_AS(RankModel::from_cost(1, [](NodeId, NodeId) { return 0.0; }), ValidationError);
}

TEST_CASE("rank matrix") {
    auto model = RankModel::from_cost(3, [](NodeId u, NodeId v) { return double(u + v); });
    const auto m = model.rank_matrix();
    CHECK(m[0 * 3 + 1] == 1);
    CHECK(m[0 * 3 + 2] == 2);
    CHECK(m[1 * 3 + 2] == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(m[i * 3 + i] == 0);
        for (int j = 0; j < 3; ++j) CHECK(m[i * 3 + j] == m[j * 3 + i]);
    }
}

TEST_CASE("from_order validates the permutation") {
    CHECK_NOTHROW(RankModel::from_order(3, {{1, 2}, {0, 1}, {0, 2}}));
    CHECK_THROWS_AS(RankModel::from_order(3, {{1, 2}, {0, 1}}), ValidationError);
    CHECK_THROWS_AS(RankModel::from_order(3, {{1, 2}, {1, 2}, {0, 2}}), ValidationError);
    CHECK_THROWS_AS(RankModel::from_order(3, {{1, 2}, {0, 1}, {2, 0}}), InvalidPairError);
}

TEST_CASE("property: bijection, strict-cost dominance, tie-only seed effects") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 40; ++trial) {
        const std::uint32_t n = 2 + rng() % 30;
        // few distinct levels so that ties are common
        const int levels = 1 + static_cast<int>(rng() % 6);
        std::vector<double> cost(n * n);
        for (auto& c : cost) c = static_cast<double>(rng() % levels) * 0.25;
        auto fn = [&](NodeId u, NodeId v) { return cost[u * n + v]; };
        const Seed s1 = rng();
        const Seed s2 = rng();
        auto a = RankModel::from_cost(n, fn, SortDirection::Ascending, s1);
        auto b = RankModel::from_cost(n, fn, SortDirection::Ascending, s2);

        std::set<NodePair> pairs(a.order().begin(), a.order().end());
        CHECK(pairs.size() == pair_count(n));
        for (Rank r = 1; r < a.pair_count(); ++r) {
            const auto p = a.at(r);
            const auto q = a.at(r + 1);
            CHECK(cost[p.u * n + p.v] <= cost[q.u * n + q.v]);
        }
        // the two seeds agree on the cost at every rank: only equal-cost pairs moved
        for (Rank r = 1; r <= a.pair_count(); ++r) {
            const auto p = a.at(r);
            const auto q = b.at(r);
            CHECK(cost[p.u * n + p.v] == cost[q.u * n + q.v]);
        }
    }
}
