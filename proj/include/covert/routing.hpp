#pragma once

// Density-Based Routing and a gradient-based baseline over a NodeGraph.

#include <covert/netsim.hpp>
#include <covert/rng.hpp>

#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace covert {

/// Which beacon senders a node keeps as relay candidates.
enum class CandidateRule {
    StrictBackward,  ///< only neighbours strictly closer (in hops) to the base station
    Literal,         ///< every neighbour whose broadcast was heard
};

struct BeaconState {
    static constexpr int kUnreached = -1;

    int base_station = 0;
    std::vector<int> hop_count;                ///< kUnreached if the flood never arrived
    std::vector<std::vector<int>> candidates;  ///< sorted ascending by id

    [[nodiscard]] bool reached(int node) const { return hop_count.at(node) != kUnreached; }
};

/// Stage 1: the base station's beacon floods the communication graph breadth-first,
/// each node rebroadcasting once.
BeaconState beacon_flood(const NodeGraph& graph, int base_station,
                         CandidateRule rule = CandidateRule::StrictBackward);

/// Degree-proportional draw over `candidates` using cumulative intervals over the
/// candidates sorted by (degree, id). `degrees` is indexed by node id.
/// Empty when there are no candidates. A zero total degree falls back to uniform.
std::optional<int> select_relay(std::span<const int> candidates, std::span<const int> degrees, Rng& rng);

/// p_max / (1 + exp(-(degree - mean_degree))).
double node_tx_prob(double degree, double mean_degree, double p_max);

struct RoutePath {
    std::vector<int> hops;                ///< source first, base station last
    std::vector<double> per_hop_tx_prob;  ///< one per hop; 0 for the base station
    std::vector<bool> secure_flags;       ///< one per hop; true when the node has a d_link neighbour

    [[nodiscard]] std::size_t relay_count() const noexcept { return hops.size() > 2 ? hops.size() - 2 : 0; }
};

enum class RouteFailure { None, Unreachable, NoCandidates, Cycle };

struct RouteResult {
    std::optional<RoutePath> path;
    RouteFailure failure = RouteFailure::None;

    [[nodiscard]] bool ok() const noexcept { return path.has_value(); }
};

/// Stage 2: hop by hop degree-weighted relay selection to the base station.
RouteResult route_dbr(const NodeGraph& graph, const BeaconState& beacon, int source, double p_max, Rng& rng);

/// Baseline: next hop is a candidate with minimum hop count, ties uniform.
/// Hops carry tx probability 1 (no scheduling).
RouteResult route_gbr(const NodeGraph& graph, const BeaconState& beacon, int source, Rng& rng);

/// Fraction of intermediate relays that are not isolatable under d_link; 1 when
/// the path has no relays.
double secure_relay_ratio(const RoutePath& path, const NodeGraph& graph, double d_link);

/// Path table: header `order,id,x,y,degree,p_i,secure`.
void write_path(std::ostream& out, const RoutePath& path, const NodeGraph& graph);

std::string_view to_string(CandidateRule rule) noexcept;
std::string_view to_string(RouteFailure failure) noexcept;

}  // namespace covert
