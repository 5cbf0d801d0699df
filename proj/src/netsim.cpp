#include <covert/netsim.hpp>
#include <covert/stats.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace covert {
namespace {

void check_region(Region region) {
    if (!(region.width > 0.0 && region.height > 0.0)) throw std::invalid_argument("region must have positive extent");
}

// One coordinate from N(center, spread^2) truncated to [0, upper].
double truncated_normal(double center, double spread, double upper, Rng& rng) {
    if (spread == 0.0) return std::clamp(center, 0.0, upper);
    if (std::isinf(spread)) return std::uniform_real_distribution<double>{0.0, upper}(rng);
    const double lo = stats::normal_cdf((0.0 - center) / spread);
    const double hi = stats::normal_cdf((upper - center) / spread);
    if (!(hi - lo > 1e-300)) return std::clamp(center, 0.0, upper);
    double u = std::uniform_real_distribution<double>{lo, hi}(rng);
    u = std::clamp(u, std::nextafter(0.0, 1.0), std::nextafter(1.0, 0.0));
    return std::clamp(center + spread * stats::normal_quantile(u), 0.0, upper);
}

}  // namespace

double distance(Point a, Point b) noexcept { return std::hypot(a.x - b.x, a.y - b.y); }

std::vector<std::vector<int>> radius_adjacency(std::span<const Point> positions, double radius) {
    const int n = static_cast<int>(positions.size());
    std::vector<std::vector<int>> adj(n);
    const double r2 = radius * radius;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const double dx = positions[u].x - positions[v].x;
            const double dy = positions[u].y - positions[v].y;
            if (dx * dx + dy * dy <= r2) {
                adj[u].push_back(v);
                adj[v].push_back(u);
            }
        }
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return adj;
}

NodeGraph::NodeGraph(Region region, std::vector<Point> positions, double d_link, double comm_radius)
    : region_(region), positions_(std::move(positions)), d_link_(d_link), comm_radius_(comm_radius) {
    check_region(region_);
    if (!(d_link_ >= 0.0 && comm_radius_ >= 0.0)) throw std::invalid_argument("NodeGraph: radii must be non-negative");
    for (const auto& p : positions_)
        if (!region_.contains(p)) throw std::invalid_argument("NodeGraph: position outside region");
    link_adj_ = radius_adjacency(positions_, d_link_);
    comm_adj_ = radius_adjacency(positions_, comm_radius_);
}

std::vector<int> NodeGraph::degrees() const {
    std::vector<int> out;
    out.reserve(size());
    for (const auto& list : comm_adj_) out.push_back(static_cast<int>(list.size()));
    return out;
}

double NodeGraph::mean_degree() const noexcept {
    if (positions_.empty()) return 0.0;
    std::size_t total = 0;
    for (const auto& list : comm_adj_) total += list.size();
    return static_cast<double>(total) / static_cast<double>(positions_.size());
}

std::vector<Point> sample_uniform_points(Region region, int n, Rng& rng) {
    check_region(region);
    if (n < 0) throw std::invalid_argument("sample_uniform_points: n must be >= 0");
    std::uniform_real_distribution<double> ux{0.0, region.width};
    std::uniform_real_distribution<double> uy{0.0, region.height};
    std::vector<Point> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double x = ux(rng);
        out.push_back({x, uy(rng)});
    }
    return out;
}

std::vector<Point> sample_clustered_points(Region region, int n, std::span<const Cluster> clusters, Rng& rng) {
    check_region(region);
    if (n < 0) throw std::invalid_argument("sample_clustered_points: n must be >= 0");
    if (clusters.empty()) throw std::invalid_argument("sample_clustered_points: no clusters");
    std::vector<double> weights;
    double total = 0.0;
    for (const auto& c : clusters) {
        if (!(c.weight > 0.0)) throw std::invalid_argument("cluster weights must be positive");
        if (!(c.spread >= 0.0)) throw std::invalid_argument("cluster spread must be non-negative");
        weights.push_back(c.weight);
        total += c.weight;
    }
    if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("cluster weights must sum to 1");

    std::discrete_distribution<int> pick{weights.begin(), weights.end()};
    std::vector<Point> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        const auto& c = clusters[pick(rng)];
        const double x = truncated_normal(c.center.x, c.spread, region.width, rng);
        out.push_back({x, truncated_normal(c.center.y, c.spread, region.height, rng)});
    }
    return out;
}

std::vector<Point> sample_ppp(Region region, double lambda, Rng& rng) {
    check_region(region);
    if (!(lambda >= 0.0)) throw std::invalid_argument("sample_ppp: lambda must be >= 0");
    if (lambda == 0.0) return {};
    const int n = std::poisson_distribution<int>{lambda * region.area()}(rng);
    return sample_uniform_points(region, n, rng);
}

NodeGraph generate_uniform(Region region, int n, Rng& rng, double d_link, double comm_radius) {
    return NodeGraph{region, sample_uniform_points(region, n, rng), d_link, comm_radius};
}

NodeGraph generate_nonuniform(Region region, int n, std::span<const Cluster> clusters, Rng& rng, double d_link,
                              double comm_radius) {
    return NodeGraph{region, sample_clustered_points(region, n, clusters, rng), d_link, comm_radius};
}

double void_probability(double lambda, double radius) {
    if (!(lambda >= 0.0 && radius >= 0.0)) throw std::invalid_argument("void_probability: negative input");
    return std::exp(-std::numbers::pi * lambda * radius * radius);
}

double isolation_radius(double lambda, double epsilon) {
    if (!(lambda > 0.0)) throw std::invalid_argument("isolation_radius: lambda must be positive");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("isolation_radius: epsilon must lie in (0,1)");
    return std::sqrt(-std::log1p(-epsilon) / (std::numbers::pi * lambda));
}

double shadow_density_threshold(double d_detect) {
    if (!(d_detect > 0.0)) throw std::invalid_argument("shadow_density_threshold: distance must be positive");
    return 1.0 / (std::numbers::pi * d_detect * d_detect);
}

std::vector<std::vector<int>> clusters(const NodeGraph& graph, double radius) {
    const bool use_link = radius == graph.d_link();
    const bool use_comm = !use_link && radius == graph.comm_radius();
    std::vector<std::vector<int>> owned;
    if (!use_link && !use_comm) owned = radius_adjacency(graph.positions(), radius);
    auto neighbors = [&](int u) -> std::span<const int> {
        if (use_link) return graph.link_neighbors(u);
        if (use_comm) return graph.comm_neighbors(u);
        return owned[u];
    };

    const int n = static_cast<int>(graph.size());
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<int> component;
        stack.push_back(start);
        seen[start] = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            component.push_back(u);
            for (int v : neighbors(u)) {
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
            }
        }
        std::sort(component.begin(), component.end());
        out.push_back(std::move(component));
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
    return out;
}

bool is_isolatable(const NodeGraph& graph, int node, double d_link, double min_test_span, double d0) {
    if (node < 0 || static_cast<std::size_t>(node) >= graph.size())
        throw std::out_of_range("is_isolatable: node index out of range");
    if (d_link - d0 < min_test_span) return false;
    if (d_link == graph.d_link()) return graph.link_neighbors(node).empty();
    const Point p = graph.position(node);
    const auto positions = graph.positions();
    for (int v = 0; v < static_cast<int>(positions.size()); ++v) {
        if (v != node && distance(p, positions[v]) <= d_link) return false;
    }
    return true;
}

double isolatable_fraction(const NodeGraph& graph, double d_link) {
    if (graph.size() == 0) return 0.0;
    int count = 0;
    for (int v = 0; v < static_cast<int>(graph.size()); ++v) count += is_isolatable(graph, v, d_link);
    return static_cast<double>(count) / static_cast<double>(graph.size());
}

void write_nodes(std::ostream& out, const NodeGraph& graph) {
    out << "id,x,y\n";
    const auto positions = graph.positions();
    for (std::size_t i = 0; i < positions.size(); ++i) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%zu,%.6f,%.6f\n", i, positions[i].x, positions[i].y);
        out << buf;
    }
}

void write_edges(std::ostream& out, const NodeGraph& graph) {
    out << "u,v,radius_tag\n";
    for (int u = 0; u < static_cast<int>(graph.size()); ++u)
        for (int v : graph.link_neighbors(u))
            if (u < v) out << u << ',' << v << ",link\n";
    for (int u = 0; u < static_cast<int>(graph.size()); ++u)
        for (int v : graph.comm_neighbors(u))
            if (u < v) out << u << ',' << v << ",comm\n";
}

}  // namespace covert
