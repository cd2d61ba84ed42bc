#include "binsim/world.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace binsim {

double euclidean(Position a, Position b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

std::vector<std::vector<std::pair<int, double>>> Graph::adjacency() const {
    std::vector<std::vector<std::pair<int, double>>> adj(vertices.size());
    for (const Edge& e : edges) {
        adj[e.u].emplace_back(e.v, e.weight);
        adj[e.v].emplace_back(e.u, e.weight);
    }
    for (auto& neighbors : adj) std::sort(neighbors.begin(), neighbors.end());
    return adj;
}

int Graph::find_label(const std::string& label) const {
    for (const Vertex& v : vertices) {
        if (v.label == label) return v.id;
    }
    return -1;
}

std::vector<Position> place_bins(const WorldConfig& config, RandomStream& rng) {
    if (config.bin_count < 1) {
        throw SimError("place_bins: bin_count must be at least 1");
    }
    std::vector<Position> placed;
    placed.reserve(config.bin_count);
    const Bounds& b = config.bounds;
    int attempts = 0;
    while (static_cast<int>(placed.size()) < config.bin_count) {
        if (attempts >= kMaxPlacementAttempts) {
            throw PlacementExhausted("place_bins: no room left for " +
                                     std::to_string(config.bin_count) + " bins after " +
                                     std::to_string(kMaxPlacementAttempts) + " attempts");
        }
        ++attempts;
        Position candidate{rng.uniform(b.xmin, b.xmax), rng.uniform(b.ymin, b.ymax)};
        bool clear = true;
        for (const Position& p : placed) {
            if (euclidean(p, candidate) < kMinBinSeparation) {
                clear = false;
                break;
            }
        }
        if (clear) placed.push_back(candidate);
    }
    return placed;
}

namespace {

void check_connected_from_depot(const Graph& g) {
    std::vector<bool> seen(g.vertices.size(), false);
    std::queue<int> frontier;
    frontier.push(g.depot_vertex);
    seen[g.depot_vertex] = true;
    const auto adj = g.adjacency();
    while (!frontier.empty()) {
        int u = frontier.front();
        frontier.pop();
        for (const auto& [v, w] : adj[u]) {
            if (!seen[v]) {
                seen[v] = true;
                frontier.push(v);
            }
        }
    }
    for (const Vertex& v : g.vertices) {
        if (!seen[v.id]) {
            throw DisconnectedGraph("build_graph: vertex " + std::to_string(v.id) + " (" +
                                    v.label + ") unreachable from the depot");
        }
    }
}

}  // namespace

Graph build_graph(const std::vector<Position>& bin_positions, const WorldConfig& config) {
    Graph g;
    const int n = static_cast<int>(bin_positions.size());
    g.vertices.reserve(n + 2);
    for (int i = 0; i < n; ++i) {
        g.vertices.push_back({i, "B" + std::to_string(i), bin_positions[i], VertexKind::BinSite});
    }
    g.dump_vertex = n;
    g.vertices.push_back({n, "DUMP", config.dump_position, VertexKind::Dump});
    if (config.depot_position == config.dump_position) {
        g.depot_vertex = n;  // single shared site
    } else {
        g.depot_vertex = n + 1;
        g.vertices.push_back({n + 1, "DEPOT", config.depot_position, VertexKind::Depot});
    }

    if (config.graph_mode == GraphMode::CompleteEuclidean) {
        const int total = g.size();
        for (int u = 0; u < total; ++u) {
            for (int v = u + 1; v < total; ++v) {
                g.edges.push_back({u, v, euclidean(g.vertices[u].position, g.vertices[v].position)});
            }
        }
    } else {
        for (const Edge& e : config.explicit_edges) {
            if (e.u < 0 || e.u >= g.size() || e.v < 0 || e.v >= g.size()) {
                throw InvalidVertex("build_graph: edge endpoint out of range: " +
                                    std::to_string(e.u) + " " + std::to_string(e.v));
            }
            if (e.u == e.v) {
                throw SimError("build_graph: self-loop on vertex " + std::to_string(e.u));
            }
            if (e.weight < 0.0) {
                throw NegativeWeight("build_graph: negative edge weight on " +
                                     std::to_string(e.u) + "-" + std::to_string(e.v));
            }
            g.edges.push_back(e);
        }
        check_connected_from_depot(g);
    }
    return g;
}

}  // namespace binsim
