#include "oracles.hpp"

#include <covert/netsim.hpp>
#include <covert/stats.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace covert {
namespace {

NodeGraph line_graph() {
    // 0 -- 1 -- 2 at 4 m spacing, 3 far away.
    return NodeGraph({100.0, 100.0}, {{10, 10}, {14, 10}, {18, 10}, {80, 80}}, 5.0, 5.0);
}

TEST(NodeGraphTest, EdgesAtRadiusInclusive) {
    const NodeGraph g({10.0, 10.0}, {{0, 0}, {5, 0}, {5.0001, 5}}, 5.0, 5.0);
    ASSERT_EQ(g.link_neighbors(0).size(), 1u);
    EXPECT_EQ(g.link_neighbors(0)[0], 1);
    EXPECT_EQ(g.degree(2), 0);
}

TEST(NodeGraphTest, RejectsOutOfRegion) {
    EXPECT_THROW(NodeGraph({10.0, 10.0}, {{11, 0}}, 5.0, 5.0), std::invalid_argument);
}

TEST(NodeGraphTest, AdjacencyMatchesBruteForceProperty) {
    Rng rng{1};
    for (int trial = 0; trial < 30; ++trial) {
        const Region region{100.0, 60.0};
        const int n = 20 + static_cast<int>(rng() % 120);
        const auto g = generate_uniform(region, n, rng, 6.0, 15.0);
        ASSERT_EQ(g.size(), static_cast<std::size_t>(n));
        for (int u = 0; u < n; ++u) {
            std::set<int> link(g.link_neighbors(u).begin(), g.link_neighbors(u).end());
            std::set<int> comm(g.comm_neighbors(u).begin(), g.comm_neighbors(u).end());
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;
                const double d = std::hypot(g.position(u).x - g.position(v).x, g.position(u).y - g.position(v).y);
                EXPECT_EQ(link.count(v) == 1, d <= 6.0);
                EXPECT_EQ(comm.count(v) == 1, d <= 15.0);
            }
            EXPECT_FALSE(link.count(u));
        }
        double sum = 0.0;
        for (int d : g.degrees()) sum += d;
        EXPECT_NEAR(g.mean_degree(), sum / n, 1e-12);
    }
}

TEST(Sampling, UniformPointsInRegionAndUnbiased) {
    Rng rng{2};
    const Region region{200.0, 100.0};
    const auto pts = sample_uniform_points(region, 20000, rng);
    stats::RunningStats x, y;
    for (auto p : pts) {
        EXPECT_TRUE(region.contains(p));
        x.add(p.x);
        y.add(p.y);
    }
    EXPECT_NEAR(x.mean(), 100.0, 3.0 * x.std_error());
    EXPECT_NEAR(y.mean(), 50.0, 3.0 * y.std_error());
}

TEST(Sampling, ClusteredPointsStayInsideAndConcentrate) {
    Rng rng{3};
    const Region region{200.0, 100.0};
    const std::vector<Cluster> clusters{{{5.0, 5.0}, 10.0, 0.5}, {{150.0, 50.0}, 0.0, 0.5}};
    const auto pts = sample_clustered_points(region, 4000, clusters, rng);
    int pinned = 0;
    for (auto p : pts) {
        EXPECT_TRUE(region.contains(p));
        pinned += p.x == 150.0 && p.y == 50.0;
    }
    EXPECT_NEAR(pinned / 4000.0, 0.5, 3.0 * std::sqrt(0.25 / 4000));
}

TEST(Sampling, ClusterWeightsValidated) {
    Rng rng{4};
    const Region region{200.0, 100.0};
    const std::vector<Cluster> bad{{{5.0, 5.0}, 10.0, 0.5}, {{150.0, 50.0}, 3.0, 0.6}};
    EXPECT_THROW(sample_clustered_points(region, 10, bad, rng), std::invalid_argument);
    EXPECT_THROW(sample_clustered_points(region, 10, {}, rng), std::invalid_argument);
}

TEST(Sampling, PoissonCountMean) {
    Rng rng{5};
    const Region region{50.0, 40.0};
    stats::RunningStats s;
    for (int i = 0; i < 3000; ++i) s.add(double(sample_ppp(region, 0.01, rng).size()));
    EXPECT_NEAR(s.mean(), 20.0, 3.0 * s.std_error());
    EXPECT_NEAR(s.variance(), 20.0, 2.0);
}

TEST(Geometry, VoidProbabilityFrozen) {
    EXPECT_NEAR(void_probability(0.01, 5.0), 0.4559381, 1e-6);
    EXPECT_DOUBLE_EQ(void_probability(0.01, 0.0), 1.0);
    EXPECT_NEAR(shadow_density_threshold(5.0), 0.0127324, 1e-7);
    EXPECT_NEAR(isolation_radius(0.01, 0.5441), 5.00027, 1e-4);
}

TEST(Geometry, IsolationRadiusInvertsVoidProbabilityProperty) {
    Rng rng{6};
    std::uniform_real_distribution<double> lam{1e-4, 1.0};
    std::uniform_real_distribution<double> eps{1e-3, 0.999};
    for (int i = 0; i < 2000; ++i) {
        const double l = lam(rng), e = eps(rng);
        EXPECT_NEAR(void_probability(l, isolation_radius(l, e)), 1.0 - e, 1e-9);
    }
}

TEST(Geometry, VoidProbabilityMatchesPoissonSimulation) {
    // Empty disc of radius 5 around the region center.
    Rng rng{7};
    const Region region{100.0, 100.0};
    const double lambda = 0.01;
    int empty = 0;
    constexpr int kTrials = 10000;
    for (int i = 0; i < kTrials; ++i) {
        bool hit = false;
        for (auto p : sample_ppp(region, lambda, rng)) hit |= distance(p, {50.0, 50.0}) <= 5.0;
        empty += !hit;
    }
    const double expect = void_probability(lambda, 5.0);
    EXPECT_NEAR(double(empty) / kTrials, expect, 3.0 * std::sqrt(expect * (1 - expect) / kTrials));
}

TEST(Clusters, MatchesUnionFindOracle) {
    Rng rng{8};
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = generate_uniform({150.0, 80.0}, 150, rng, 5.0, 12.0);
        const auto comps = clusters(g, 12.0);
        oracle::UnionFind uf(static_cast<int>(g.size()));
        for (int u = 0; u < static_cast<int>(g.size()); ++u)
            for (int v = u + 1; v < static_cast<int>(g.size()); ++v)
                if (distance(g.position(u), g.position(v)) <= 12.0) uf.unite(u, v);
        std::size_t total = 0;
        for (std::size_t c = 0; c < comps.size(); ++c) {
            total += comps[c].size();
            if (c > 0) EXPECT_GE(comps[c - 1].size(), comps[c].size());
            EXPECT_TRUE(std::is_sorted(comps[c].begin(), comps[c].end()));
            for (int v : comps[c]) EXPECT_EQ(uf.find(v), uf.find(comps[c].front()));
            if (c > 0) EXPECT_NE(uf.find(comps[c].front()), uf.find(comps[0].front()));
        }
        EXPECT_EQ(total, g.size());
        // Arbitrary radius goes through an owned adjacency.
        EXPECT_GE(clusters(g, 5.0).size(), comps.size());
    }
}

TEST(Isolation, Basic) {
    const auto g = line_graph();
    EXPECT_FALSE(is_isolatable(g, 0, 5.0));
    EXPECT_FALSE(is_isolatable(g, 1, 5.0));
    EXPECT_TRUE(is_isolatable(g, 3, 5.0));
    EXPECT_TRUE(is_isolatable(g, 0, 3.9));
    EXPECT_FALSE(is_isolatable(g, 3, 5.0, 6.0));
    EXPECT_FALSE(is_isolatable(g, 3, 5.0, 2.0, 4.0));
    EXPECT_NEAR(isolatable_fraction(g, 5.0), 0.25, 1e-15);
    EXPECT_THROW(is_isolatable(g, 4, 5.0), std::out_of_range);
}

TEST(Isolation, FractionFallsWithDensity) {
    Rng rng{9};
    const Region region{200.0, 100.0};
    double previous = 1.1;
    for (int n : {50, 200, 800}) {
        double sum = 0.0;
        for (int i = 0; i < 10; ++i) sum += isolatable_fraction(generate_uniform(region, n, rng), 5.0);
        EXPECT_LT(sum / 10, previous);
        previous = sum / 10;
    }
}

TEST(Io, NodesAndEdges) {
    const auto g = line_graph();
    std::ostringstream nodes, edges;
    write_nodes(nodes, g);
    write_edges(edges, g);
    EXPECT_EQ(nodes.str().substr(0, 7), "id,x,y\n");
    const std::string e = edges.str();
    EXPECT_EQ(e.substr(0, 15), "u,v,radius_tag\n");
    EXPECT_NE(e.find("0,1,link"), std::string::npos);
    EXPECT_NE(e.find("0,1,comm"), std::string::npos);
    EXPECT_EQ(e.find("0,2,"), std::string::npos);
}

TEST(Generate, EmptyAndDensity) {
    Rng rng{10};
    const auto empty = generate_uniform({200.0, 100.0}, 0, rng);
    EXPECT_EQ(empty.size(), 0u);
    EXPECT_DOUBLE_EQ(empty.mean_degree(), 0.0);
    EXPECT_DOUBLE_EQ(generate_uniform({200.0, 100.0}, 300, rng).density(), 0.015);
}

TEST(Generate, MeanDegreeBelowUnboundedEstimate) {
    Rng rng{11};
    stats::RunningStats s;
    for (int i = 0; i < 100; ++i) s.add(generate_uniform({200.0, 100.0}, 300, rng).mean_degree());
    const double unbounded = 0.015 * std::numbers::pi * 400.0;
    EXPECT_LT(s.mean(), unbounded);
    // Edge effects in a 200 x 100 box with r = 20 remove roughly a fifth of the neighbours.
    EXPECT_GT(s.mean(), 0.7 * unbounded);
}

TEST(Generate, ClusterSharesAndPinnedCenters) {
    Rng rng{12};
    const Region region{200.0, 100.0};
    const std::vector<Cluster> pinned{{{30.0, 40.0}, 0.0, 1.0}};
    const auto graph = generate_nonuniform(region, 50, pinned, rng);
    for (auto p : graph.positions()) {
        EXPECT_DOUBLE_EQ(p.x, 30.0);
        EXPECT_DOUBLE_EQ(p.y, 40.0);
    }
    const std::vector<Cluster> two{{{40.0, 50.0}, 5.0, 0.5}, {{160.0, 50.0}, 5.0, 0.5}};
    int left = 0;
    for (auto p : sample_clustered_points(region, 10000, two, rng)) left += p.x < 100.0;
    EXPECT_NEAR(left / 10000.0, 0.5, 0.02);
}

// Two-sample Kolmogorov-Smirnov statistic.
double ks_statistic(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::abs(double(i) / a.size() - double(j) / b.size()));
    }
    return d;
}

TEST(Generate, HugeSpreadApproachesUniform) {
    Rng rng{13};
    const Region region{200.0, 100.0};
    const std::vector<Cluster> wide{{{100.0, 50.0}, 1e6, 1.0}};
    int rejections = 0;
    constexpr int kSeeds = 100;
    constexpr int kPoints = 300;
    // Critical value at 0.01 for equal samples: 1.628 * sqrt(2/n).
    const double critical = 1.628 * std::sqrt(2.0 / kPoints);
    for (int s = 0; s < kSeeds; ++s) {
        const auto clustered = sample_clustered_points(region, kPoints, wide, rng);
        const auto uniform = sample_uniform_points(region, kPoints, rng);
        std::vector<double> cx, cy, ux, uy;
        for (auto p : clustered) cx.push_back(p.x), cy.push_back(p.y);
        for (auto p : uniform) ux.push_back(p.x), uy.push_back(p.y);
        rejections += ks_statistic(cx, ux) > critical || ks_statistic(cy, uy) > critical;
    }
    // Two tests at 0.01 per seed: expect about 2 rejections in 100.
    EXPECT_LE(rejections, 7);
}

TEST(Geometry, ShadowThresholdIdentityProperty) {
    EXPECT_NEAR(shadow_density_threshold(1.0), 1.0 / std::numbers::pi, 1e-15);
    EXPECT_DOUBLE_EQ(void_probability(0.0, 5.0), 1.0);
    EXPECT_LT(isolation_radius(0.01, 1e-12), 1e-4);
    Rng rng{14};
    std::uniform_real_distribution<double> d{0.01, 100.0};
    for (int i = 0; i < 1000; ++i) {
        const double r = d(rng);
        EXPECT_NEAR(shadow_density_threshold(r) * std::numbers::pi * r * r, 1.0, 1e-12);
    }
}

TEST(Clusters, PairAtRadius) {
    const NodeGraph close({10.0, 10.0}, {{1, 1}, {1 + 5.0 - 1e-9, 1}}, 5.0, 5.0);
    EXPECT_EQ(clusters(close, 5.0).size(), 1u);
    const NodeGraph apart({10.0, 10.0}, {{1, 1}, {1 + 5.0 + 1e-9, 1}}, 5.0, 5.0);
    EXPECT_EQ(clusters(apart, 5.0).size(), 2u);
}

TEST(Clusters, GiantComponentGrowsWithDensity) {
    Rng rng{15};
    const Region region{200.0, 100.0};
    double previous = 0.0;
    // c = lambda * pi * 25 ranges from about 1.2 to 3.9.
    for (int n : {300, 450, 650, 1000}) {
        stats::RunningStats s;
        for (int i = 0; i < 100; ++i) {
            const auto g = generate_uniform(region, n, rng, 5.0, 20.0);
            s.add(double(clusters(g, 5.0).front().size()) / n);
        }
        EXPECT_GT(s.mean(), previous) << "n=" << n;
        previous = s.mean();
    }
}

TEST(Isolation, LinkedNodesAreExactlyTheNonIsolatable) {
    Rng rng{16};
    const auto g = generate_uniform({200.0, 100.0}, 300, rng);
    for (int v = 0; v < static_cast<int>(g.size()); ++v)
        EXPECT_EQ(g.link_neighbors(v).empty(), is_isolatable(g, v, g.d_link()));
}

}  // namespace
}  // namespace covert
