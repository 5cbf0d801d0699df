#pragma once

// Dense-network deployments and the geometry of what a mobile warden can isolate.

#include <covert/rng.hpp>

#include <iosfwd>
#include <span>
#include <vector>

namespace covert {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

double distance(Point a, Point b) noexcept;

struct Region {
    double width = 200.0;
    double height = 100.0;

    [[nodiscard]] double area() const noexcept { return width * height; }
    [[nodiscard]] bool contains(Point p) const noexcept {
        return p.x >= 0.0 && p.x <= width && p.y >= 0.0 && p.y <= height;
    }
};

/// One Gaussian component of a nonuniform deployment.
struct Cluster {
    Point center;
    double spread = 10.0;  ///< per-axis standard deviation; 0 pins nodes to the center
    double weight = 1.0;
};

/// Node positions plus the two radius graphs built over them: the detection-link
/// graph (radius d_link) and the communication graph (radius comm_radius).
/// Edge (u,v) exists iff distance(u,v) <= radius. Immutable after construction.
class NodeGraph {
public:
    NodeGraph(Region region, std::vector<Point> positions, double d_link, double comm_radius);

    [[nodiscard]] std::size_t size() const noexcept { return positions_.size(); }
    [[nodiscard]] const Region& region() const noexcept { return region_; }
    [[nodiscard]] std::span<const Point> positions() const noexcept { return positions_; }
    [[nodiscard]] Point position(int node) const { return positions_.at(node); }
    [[nodiscard]] double d_link() const noexcept { return d_link_; }
    [[nodiscard]] double comm_radius() const noexcept { return comm_radius_; }

    [[nodiscard]] std::span<const int> link_neighbors(int node) const { return link_adj_.at(node); }
    [[nodiscard]] std::span<const int> comm_neighbors(int node) const { return comm_adj_.at(node); }
    /// Neighbour count under comm_radius.
    [[nodiscard]] int degree(int node) const { return static_cast<int>(comm_adj_.at(node).size()); }
    [[nodiscard]] std::vector<int> degrees() const;
    [[nodiscard]] double mean_degree() const noexcept;
    /// Nodes per square meter.
    [[nodiscard]] double density() const noexcept { return static_cast<double>(size()) / region_.area(); }

private:
    Region region_;
    std::vector<Point> positions_;
    double d_link_;
    double comm_radius_;
    std::vector<std::vector<int>> link_adj_;
    std::vector<std::vector<int>> comm_adj_;
};

/// Adjacency lists of the radius graph over `positions` (sorted, no self loops).
std::vector<std::vector<int>> radius_adjacency(std::span<const Point> positions, double radius);

std::vector<Point> sample_uniform_points(Region region, int n, Rng& rng);

/// Mixture placement: each node picks a cluster by weight, then each coordinate is
/// drawn from the cluster's normal truncated to the region (exact inverse-CDF draw).
/// Weights must be positive and sum to 1 within 1e-9.
std::vector<Point> sample_clustered_points(Region region, int n, std::span<const Cluster> clusters,
                                           Rng& rng);

/// Poisson-count point process: N ~ Poisson(lambda * area), then N uniform points.
std::vector<Point> sample_ppp(Region region, double lambda, Rng& rng);

NodeGraph generate_uniform(Region region, int n, Rng& rng, double d_link = 5.0, double comm_radius = 20.0);
NodeGraph generate_nonuniform(Region region, int n, std::span<const Cluster> clusters, Rng& rng,
                              double d_link = 5.0, double comm_radius = 20.0);

/// exp(-pi lambda r^2).
double void_probability(double lambda, double radius);

/// Radius below which the void probability exceeds 1 - epsilon.
double isolation_radius(double lambda, double epsilon);

/// 1 / (pi d^2): above this density the warden cannot isolate a single transmitter.
double shadow_density_threshold(double d_detect);

/// Connected components of the radius graph, largest first; each component's nodes ascending.
std::vector<std::vector<int>> clusters(const NodeGraph& graph, double radius);

/// True iff no other node lies within d_link of `node` and the warden's annulus
/// (d0, d_link) is at least min_test_span wide.
bool is_isolatable(const NodeGraph& graph, int node, double d_link, double min_test_span = 0.0,
                   double d0 = 0.0);

/// Fraction of nodes for which is_isolatable holds (min_test_span = 0).
double isolatable_fraction(const NodeGraph& graph, double d_link);

/// Node list: header `id,x,y`, one row per node.
void write_nodes(std::ostream& out, const NodeGraph& graph);
/// Edge list: header `u,v,radius_tag` with tag `link` (d_link) or `comm` (comm_radius), u < v.
void write_edges(std::ostream& out, const NodeGraph& graph);

}  // namespace covert
