#pragma once

#include <optional>
#include <vector>

#include "binsim/world.hpp"

namespace binsim {

struct ShortestPathTree {
    int source = 0;
    std::vector<double> dist;  // +infinity when unreachable
    std::vector<int> prev;     // -1 for the source and unreachable vertices

    bool reachable(int v) const;
};

enum class StopKind { Start, Pickup, Dump };

struct RouteStop {
    int vertex = 0;
    StopKind kind = StopKind::Start;
    int bin_id = -1;  // Pickup stops only
};

struct RouteLeg {
    int from = 0;
    int to = 0;
    std::vector<int> path;  // expanded shortest path, path.front()==from, path.back()==to
    double distance = 0.0;
};

struct Route {
    std::vector<RouteStop> stops;  // stops[0] is the truck's starting vertex
    std::vector<RouteLeg> legs;    // legs[i] joins stops[i] -> stops[i+1]
    double total_distance = 0.0;
    std::vector<int> planned_pickups;  // bin ids in visit order

    std::vector<int> stop_vertices() const;
};

struct PathResult {
    std::vector<int> path;
    double cost = 0.0;
};

struct FullBin {
    int bin_id = 0;
    int vertex = 0;
    int load = 0;
};

// Single-source shortest paths. Ties between equal-cost paths resolve to the
// smaller predecessor id, and the queue pops by (distance, vertex id), so the
// tree is unique for a given graph.
ShortestPathTree dijkstra(const Graph& graph, int source);

// Expanded s->t path and its cost; empty optional when t is unreachable.
std::optional<PathResult> shortest_path(const Graph& graph, int s, int t);

// Greedy nearest-neighbor pickup tour over Dijkstra distances. A dump stop is
// inserted before any pickup that would push the projected load over capacity,
// and a final dump stop drains whatever remains. Throws UnreachableStop when a
// bin or the dump cannot be reached.
Route plan_tour(const Graph& graph, int start, const std::vector<FullBin>& full_bins,
                int dump, int truck_capacity, int current_load);

}  // namespace binsim
