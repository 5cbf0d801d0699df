#include <covert/routing.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <ostream>
#include <stdexcept>

namespace covert {
namespace {

RoutePath annotate(std::vector<int> hops, const NodeGraph& graph, double p_max, bool scheduled) {
    RoutePath path;
    path.hops = std::move(hops);
    const double mean_degree = graph.mean_degree();
    for (std::size_t k = 0; k < path.hops.size(); ++k) {
        const int node = path.hops[k];
        const bool last = k + 1 == path.hops.size();
        double p = 0.0;
        if (!last) p = scheduled ? node_tx_prob(graph.degree(node), mean_degree, p_max) : 1.0;
        path.per_hop_tx_prob.push_back(p);
        path.secure_flags.push_back(!is_isolatable(graph, node, graph.d_link()));
    }
    return path;
}

void check_node(const NodeGraph& graph, int node, const char* what) {
    if (node < 0 || static_cast<std::size_t>(node) >= graph.size())
        throw std::out_of_range(std::string(what) + ": node index out of range");
}

template <typename NextHop>
RouteResult walk_to_base(const NodeGraph& graph, const BeaconState& beacon, int source, NextHop&& next_hop) {
    check_node(graph, source, "route");
    if (beacon.hop_count.size() != graph.size()) throw std::invalid_argument("route: beacon state does not match graph");
    if (!beacon.reached(source)) return {std::nullopt, RouteFailure::Unreachable};

    std::vector<char> visited(graph.size(), 0);
    std::vector<int> hops{source};
    visited[source] = 1;
    int current = source;
    while (beacon.hop_count[current] != 0) {
        const std::optional<int> relay = next_hop(current);
        if (!relay) return {std::nullopt, RouteFailure::NoCandidates};
        if (visited[*relay]) return {std::nullopt, RouteFailure::Cycle};
        visited[*relay] = 1;
        hops.push_back(*relay);
        current = *relay;
    }
    return {RoutePath{std::move(hops), {}, {}}, RouteFailure::None};
}

}  // namespace

BeaconState beacon_flood(const NodeGraph& graph, int base_station, CandidateRule rule) {
    check_node(graph, base_station, "beacon_flood");
    const int n = static_cast<int>(graph.size());
    BeaconState state;
    state.base_station = base_station;
    state.hop_count.assign(n, BeaconState::kUnreached);
    state.candidates.assign(n, {});

    // Each node rebroadcasts once, in the order the beacon first reached it.
    std::deque<int> queue{base_station};
    state.hop_count[base_station] = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v : graph.comm_neighbors(u)) {
            if (state.hop_count[v] == BeaconState::kUnreached) {
                state.hop_count[v] = state.hop_count[u] + 1;
                queue.push_back(v);
            }
            if (v == base_station) continue;
            const bool backward = state.hop_count[u] < state.hop_count[v];
            if (rule == CandidateRule::Literal || backward) state.candidates[v].push_back(u);
        }
    }
    for (auto& c : state.candidates) std::sort(c.begin(), c.end());
    return state;
}

std::optional<int> select_relay(std::span<const int> candidates, std::span<const int> degrees, Rng& rng) {
    if (candidates.empty()) return std::nullopt;
    std::vector<int> sorted(candidates.begin(), candidates.end());
    std::sort(sorted.begin(), sorted.end(), [&](int a, int b) {
        return degrees[a] != degrees[b] ? degrees[a] < degrees[b] : a < b;
    });

    double total = 0.0;
    for (int c : sorted) total += degrees[c];
    if (total <= 0.0) return sorted[std::uniform_int_distribution<std::size_t>{0, sorted.size() - 1}(rng)];

    // r0 in (0, 1]; c_k wins when r0 falls in (S_{k-1}/S, S_k/S].
    const double r0 = 1.0 - std::uniform_real_distribution<double>{0.0, 1.0}(rng);
    double cumulative = 0.0;
    for (int c : sorted) {
        cumulative += degrees[c];
        if (r0 <= cumulative / total) return c;
    }
    return sorted.back();
}

double node_tx_prob(double degree, double mean_degree, double p_max) {
    if (!(p_max > 0.0 && p_max < 1.0)) throw std::invalid_argument("node_tx_prob: p_max must lie in (0,1)");
    return p_max / (1.0 + std::exp(-(degree - mean_degree)));
}

RouteResult route_dbr(const NodeGraph& graph, const BeaconState& beacon, int source, double p_max, Rng& rng) {
    if (!(p_max > 0.0 && p_max < 1.0)) throw std::invalid_argument("route_dbr: p_max must lie in (0,1)");
    const auto degrees = graph.degrees();
    auto result = walk_to_base(graph, beacon, source, [&](int node) {
        return select_relay(beacon.candidates[node], degrees, rng);
    });
    if (result.path) result.path = annotate(std::move(result.path->hops), graph, p_max, true);
    return result;
}

RouteResult route_gbr(const NodeGraph& graph, const BeaconState& beacon, int source, Rng& rng) {
    auto result = walk_to_base(graph, beacon, source, [&](int node) -> std::optional<int> {
        const auto& cand = beacon.candidates[node];
        if (cand.empty()) return std::nullopt;
        int best = beacon.hop_count[cand.front()];
        for (int c : cand) best = std::min(best, beacon.hop_count[c]);
        std::vector<int> ties;
        for (int c : cand)
            if (beacon.hop_count[c] == best) ties.push_back(c);
        return ties[std::uniform_int_distribution<std::size_t>{0, ties.size() - 1}(rng)];
    });
    if (result.path) result.path = annotate(std::move(result.path->hops), graph, 0.5, false);
    return result;
}

double secure_relay_ratio(const RoutePath& path, const NodeGraph& graph, double d_link) {
    if (path.hops.size() <= 2) return 1.0;
    int secure = 0;
    for (std::size_t k = 1; k + 1 < path.hops.size(); ++k) secure += !is_isolatable(graph, path.hops[k], d_link);
    return static_cast<double>(secure) / static_cast<double>(path.hops.size() - 2);
}

void write_path(std::ostream& out, const RoutePath& path, const NodeGraph& graph) {
    out << "order,id,x,y,degree,p_i,secure\n";
    for (std::size_t k = 0; k < path.hops.size(); ++k) {
        const int node = path.hops[k];
        const Point p = graph.position(node);
        char buf[160];
        std::snprintf(buf, sizeof buf, "%zu,%d,%.6f,%.6f,%d,%.6f,%d\n", k, node, p.x, p.y, graph.degree(node),
                      k < path.per_hop_tx_prob.size() ? path.per_hop_tx_prob[k] : 0.0,
                      k < path.secure_flags.size() ? static_cast<int>(path.secure_flags[k]) : 0);
        out << buf;
    }
}

std::string_view to_string(CandidateRule rule) noexcept {
    return rule == CandidateRule::StrictBackward ? "strict" : "literal";
}

std::string_view to_string(RouteFailure failure) noexcept {
    switch (failure) {
        case RouteFailure::None: return "none";
        case RouteFailure::Unreachable: return "unreachable";
        case RouteFailure::NoCandidates: return "no_candidates";
        case RouteFailure::Cycle: return "cycle";
    }
    return "none";
}

}  // namespace covert
