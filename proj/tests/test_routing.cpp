#include "oracles.hpp"

#include <covert/netsim.hpp>
#include <covert/routing.hpp>
#include <covert/stats.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <sstream>

namespace covert {
namespace {

std::vector<std::vector<char>> comm_matrix(const NodeGraph& g) {
    std::vector<std::vector<char>> adj(g.size(), std::vector<char>(g.size(), 0));
    for (int u = 0; u < static_cast<int>(g.size()); ++u)
        for (int v : g.comm_neighbors(u)) adj[u][v] = 1;
    return adj;
}

TEST(Beacon, HopCountsMatchBfsOracleProperty) {
    Rng rng{1};
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = generate_uniform({200.0, 100.0}, 60 + static_cast<int>(rng() % 200), rng);
        const int bs = static_cast<int>(rng() % g.size());
        const auto beacon = beacon_flood(g, bs);
        EXPECT_EQ(beacon.hop_count, oracle::bfs_hops(comm_matrix(g), bs));
        for (int v = 0; v < static_cast<int>(g.size()); ++v) {
            if (v == bs || !beacon.reached(v)) {
                EXPECT_TRUE(beacon.candidates[v].empty());
                continue;
            }
            ASSERT_FALSE(beacon.candidates[v].empty());
            for (int c : beacon.candidates[v]) EXPECT_EQ(beacon.hop_count[c], beacon.hop_count[v] - 1);
        }
    }
}

TEST(Beacon, LiteralRuleKeepsEveryNeighbour) {
    Rng rng{2};
    const auto g = generate_uniform({200.0, 100.0}, 150, rng);
    const auto beacon = beacon_flood(g, 0, CandidateRule::Literal);
    for (int v = 1; v < static_cast<int>(g.size()); ++v) {
        if (!beacon.reached(v)) continue;
        EXPECT_EQ(beacon.candidates[v].size(), g.comm_neighbors(v).size());
    }
}

TEST(SelectRelay, DegreeProportional) {
    const std::vector<int> degrees{0, 1, 3, 6};
    const std::vector<int> candidates{3, 1, 2};
    Rng rng{3};
    std::map<int, int> counts;
    constexpr int kDraws = 60000;
    for (int i = 0; i < kDraws; ++i) ++counts[*select_relay(candidates, degrees, rng)];
    for (int c : candidates) {
        const double p = degrees[c] / 10.0;
        EXPECT_NEAR(counts[c] / double(kDraws), p, 3.0 * std::sqrt(p * (1 - p) / kDraws)) << c;
    }
}

TEST(SelectRelay, EdgeCases) {
    const std::vector<int> degrees{0, 0, 5};
    Rng rng{4};
    EXPECT_FALSE(select_relay(std::vector<int>{}, degrees, rng).has_value());
    EXPECT_EQ(*select_relay(std::vector<int>{2}, degrees, rng), 2);
    // Zero total degree: uniform, and a zero-degree candidate is never chosen otherwise.
    int first = 0;
    for (int i = 0; i < 2000; ++i) first += *select_relay(std::vector<int>{0, 1}, degrees, rng) == 0;
    EXPECT_NEAR(first / 2000.0, 0.5, 0.05);
    for (int i = 0; i < 500; ++i) EXPECT_EQ(*select_relay(std::vector<int>{0, 2}, degrees, rng), 2);
}

TEST(TxProb, LogisticValues) {
    EXPECT_DOUBLE_EQ(node_tx_prob(10.0, 10.0, 0.2), 0.1);
    EXPECT_NEAR(node_tx_prob(14.0, 10.0, 0.2), 0.1964028, 1e-7);
    EXPECT_LT(node_tx_prob(2.0, 10.0, 0.2), 0.001);
    EXPECT_THROW(node_tx_prob(1.0, 1.0, 0.0), std::invalid_argument);
    EXPECT_THROW(node_tx_prob(1.0, 1.0, 1.0), std::invalid_argument);
}

TEST(TxProb, MonotoneAndBoundedProperty) {
    Rng rng{5};
    std::uniform_real_distribution<double> deg{0.0, 60.0};
    for (int i = 0; i < 2000; ++i) {
        double a = deg(rng), b = deg(rng);
        if (a > b) std::swap(a, b);
        const double mean = deg(rng);
        EXPECT_LE(node_tx_prob(a, mean, 0.3), node_tx_prob(b, mean, 0.3));
        EXPECT_GE(node_tx_prob(a, mean, 0.3), 0.0);
        EXPECT_LE(node_tx_prob(b, mean, 0.3), 0.3);
    }
}

TEST(Routes, DbrAndGbrReachBaseStationProperty) {
    Rng rng{6};
    int routed = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = generate_uniform({200.0, 100.0}, 300, rng);
        const auto beacon = beacon_flood(g, 0);
        const int src = 1 + static_cast<int>(rng() % (g.size() - 1));
        const auto dbr = route_dbr(g, beacon, src, 0.2, rng);
        const auto gbr = route_gbr(g, beacon, src, rng);
        if (!beacon.reached(src)) {
            EXPECT_EQ(dbr.failure, RouteFailure::Unreachable);
            EXPECT_EQ(gbr.failure, RouteFailure::Unreachable);
            continue;
        }
        ++routed;
        for (const auto* r : {&dbr, &gbr}) {
            ASSERT_TRUE(r->ok());
            const auto& path = *r->path;
            EXPECT_EQ(path.hops.front(), src);
            EXPECT_EQ(path.hops.back(), 0);
            // Strictly backward candidates: hop count falls by one per hop.
            EXPECT_EQ(path.hops.size(), static_cast<std::size_t>(beacon.hop_count[src] + 1));
            for (std::size_t k = 1; k < path.hops.size(); ++k) {
                EXPECT_EQ(beacon.hop_count[path.hops[k]], beacon.hop_count[path.hops[k - 1]] - 1);
                EXPECT_LE(distance(g.position(path.hops[k]), g.position(path.hops[k - 1])), g.comm_radius());
            }
            EXPECT_EQ(path.per_hop_tx_prob.size(), path.hops.size());
            EXPECT_EQ(path.secure_flags.size(), path.hops.size());
            EXPECT_DOUBLE_EQ(path.per_hop_tx_prob.back(), 0.0);
            const double ratio = secure_relay_ratio(path, g, g.d_link());
            EXPECT_GE(ratio, 0.0);
            EXPECT_LE(ratio, 1.0);
        }
        for (std::size_t k = 0; k + 1 < gbr.path->hops.size(); ++k) EXPECT_DOUBLE_EQ(gbr.path->per_hop_tx_prob[k], 1.0);
        for (std::size_t k = 0; k + 1 < dbr.path->hops.size(); ++k) {
            EXPECT_GT(dbr.path->per_hop_tx_prob[k], 0.0);
            EXPECT_LT(dbr.path->per_hop_tx_prob[k], 0.2);
        }
    }
    EXPECT_GT(routed, 25);
}

TEST(Routes, UnreachableSource) {
    const NodeGraph g({100.0, 100.0}, {{0, 0}, {10, 0}, {90, 90}}, 5.0, 20.0);
    const auto beacon = beacon_flood(g, 0);
    Rng rng{7};
    EXPECT_EQ(route_dbr(g, beacon, 2, 0.2, rng).failure, RouteFailure::Unreachable);
    EXPECT_EQ(route_gbr(g, beacon, 2, rng).failure, RouteFailure::Unreachable);
    const auto direct = route_gbr(g, beacon, 1, rng);
    ASSERT_TRUE(direct.ok());
    EXPECT_EQ(direct.path->hops, (std::vector<int>{1, 0}));
    EXPECT_DOUBLE_EQ(secure_relay_ratio(*direct.path, g, 5.0), 1.0);
    EXPECT_THROW(route_dbr(g, beacon, 5, 0.2, rng), std::out_of_range);
}

TEST(Routes, SecureRatioCountsRelaysOnly) {
    // 0 (bs) <- 1 <- 2 <- 3 (source); node 2 has a close neighbour 4.
    const NodeGraph g({100.0, 100.0}, {{0, 50}, {15, 50}, {30, 50}, {45, 50}, {30, 53}}, 5.0, 16.0);
    RoutePath path;
    path.hops = {3, 2, 1, 0};
    EXPECT_DOUBLE_EQ(secure_relay_ratio(path, g, 5.0), 0.5);
    std::ostringstream out;
    write_path(out, path, g);
    EXPECT_EQ(out.str().substr(0, 30), "order,id,x,y,degree,p_i,secure");
}

TEST(Routes, DeterministicGivenSeed) {
    Rng g_rng{8};
    const auto g = generate_uniform({200.0, 100.0}, 300, g_rng);
    const auto beacon = beacon_flood(g, 0);
    Rng a{9}, b{9};
    for (int src = 1; src < 40; ++src) {
        const auto ra = route_dbr(g, beacon, src, 0.2, a);
        const auto rb = route_dbr(g, beacon, src, 0.2, b);
        ASSERT_EQ(ra.ok(), rb.ok());
        if (ra.ok()) EXPECT_EQ(ra.path->hops, rb.path->hops);
    }
}

NodeGraph path_graph() {
    // bs(0) -- a(1) -- b(2), spacing 15 with comm radius 20.
    return NodeGraph({100.0, 100.0}, {{0, 50}, {15, 50}, {30, 50}}, 5.0, 20.0);
}

TEST(Beacon, SingleNodeAndPathGraph) {
    const NodeGraph lone({10.0, 10.0}, {{5, 5}}, 5.0, 20.0);
    const auto b0 = beacon_flood(lone, 0);
    EXPECT_EQ(b0.hop_count, (std::vector<int>{0}));
    EXPECT_TRUE(b0.candidates[0].empty());

    const auto g = path_graph();
    const auto b = beacon_flood(g, 0);
    EXPECT_EQ(b.hop_count, (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(b.candidates[1], (std::vector<int>{0}));
    EXPECT_EQ(b.candidates[2], (std::vector<int>{1}));
    Rng rng{20};
    EXPECT_EQ(route_dbr(g, b, 2, 0.2, rng).path->hops, (std::vector<int>{2, 1, 0}));
    EXPECT_EQ(route_gbr(g, b, 2, rng).path->hops, (std::vector<int>{2, 1, 0}));
    EXPECT_EQ(route_dbr(g, b, 1, 0.2, rng).path->hops, (std::vector<int>{1, 0}));
}

TEST(SelectRelay, ChiSquareAgainstDegreeWeights) {
    const std::vector<int> degrees{1, 3, 2, 2, 2, 7};
    Rng rng{21};
    constexpr int kDraws = 100000;
    for (const std::vector<int>& candidates : {std::vector<int>{0, 1}, std::vector<int>{2, 3, 4}, std::vector<int>{5, 0, 3, 1}}) {
        std::map<int, double> counts;
        for (int i = 0; i < kDraws; ++i) counts[*select_relay(candidates, degrees, rng)] += 1.0;
        double total = 0.0;
        for (int c : candidates) total += degrees[c];
        std::vector<double> observed, expected;
        for (int c : candidates) {
            observed.push_back(counts[c]);
            expected.push_back(kDraws * degrees[c] / total);
        }
        EXPECT_GT(stats::chi_square_gof_pvalue(observed, expected), 0.01);
        if (candidates.size() == 2) EXPECT_NEAR(counts[1] / kDraws, 0.75, 0.01);
    }
}

TEST(Routes, GridGbrLengthIsBfsDistance) {
    // 10 x 5 lattice with 10 m spacing and comm radius 10: four-neighbour grid.
    std::vector<Point> pts;
    for (int y = 0; y < 5; ++y)
        for (int x = 0; x < 10; ++x) pts.push_back({5.0 + 10.0 * x, 5.0 + 10.0 * y});
    const NodeGraph g({100.0, 50.0}, pts, 5.0, 10.0);
    const auto beacon = beacon_flood(g, 0);
    Rng rng{22};
    for (int src = 1; src < static_cast<int>(g.size()); ++src) {
        const auto r = route_gbr(g, beacon, src, rng);
        ASSERT_TRUE(r.ok());
        EXPECT_EQ(static_cast<int>(r.path->hops.size()) - 1, src % 10 + src / 10);
    }
}

TEST(Routes, SecureRatioExtremes) {
    const NodeGraph dense({100.0, 100.0}, {{0, 50}, {10, 50}, {12, 50}, {14, 50}, {30, 50}}, 5.0, 20.0);
    RoutePath inside;
    inside.hops = {4, 3, 2, 1, 0};
    EXPECT_DOUBLE_EQ(secure_relay_ratio(inside, dense, 5.0), 1.0);
    const NodeGraph sparse({100.0, 100.0}, {{0, 50}, {15, 50}, {30, 50}, {45, 50}}, 5.0, 20.0);
    RoutePath spread;
    spread.hops = {3, 2, 1, 0};
    EXPECT_DOUBLE_EQ(secure_relay_ratio(spread, sparse, 5.0), 0.0);
}

TEST(Routes, ReferenceDeploymentFeasibilityAndLengths) {
    // 300 uniform nodes plus source at (200,50) and base station at (0,50).
    Rng rng{23};
    const Region region{200.0, 100.0};
    int feasible = 0;
    stats::RunningStats dbr_len, gbr_len;
    constexpr int kSeeds = 200;
    for (int s = 0; s < kSeeds; ++s) {
        auto pts = sample_uniform_points(region, 300, rng);
        pts.insert(pts.begin(), {{0.0, 50.0}, {200.0, 50.0}});
        const NodeGraph g(region, std::move(pts), 5.0, 20.0);
        const auto beacon = beacon_flood(g, 0);
        const auto dbr = route_dbr(g, beacon, 1, 0.2, rng);
        const auto gbr = route_gbr(g, beacon, 1, rng);
        if (!dbr.ok()) continue;
        ++feasible;
        std::vector<char> seen(g.size(), 0);
        for (int v : dbr.path->hops) {
            EXPECT_FALSE(seen[v]);
            seen[v] = 1;
        }
        dbr_len.add(double(dbr.path->hops.size()));
        gbr_len.add(double(gbr.path->hops.size()));
    }
    EXPECT_GE(feasible, 0.95 * kSeeds);
    EXPECT_GE(dbr_len.mean(), gbr_len.mean());
}

TEST(Routes, DbrNotWorseThanGbr) {
    // Paired on identical deployments; fails only when DBR is significantly below GBR.
    Rng rng{24};
    const Region region{200.0, 100.0};
    stats::RunningStats diff;
    for (int s = 0; s < 400; ++s) {
        auto pts = sample_uniform_points(region, 300, rng);
        pts.insert(pts.begin(), {{0.0, 50.0}, {200.0, 50.0}});
        const NodeGraph g(region, std::move(pts), 5.0, 20.0);
        const auto beacon = beacon_flood(g, 0);
        const auto dbr = route_dbr(g, beacon, 1, 0.2, rng);
        const auto gbr = route_gbr(g, beacon, 1, rng);
        if (dbr.ok() && gbr.ok())
            diff.add(secure_relay_ratio(*dbr.path, g, 5.0) - secure_relay_ratio(*gbr.path, g, 5.0));
    }
    EXPECT_GE(diff.mean() / diff.std_error(), -1.6448536269514722);
}

}  // namespace
}  // namespace covert
