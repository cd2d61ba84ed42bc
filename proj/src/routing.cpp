#include "binsim/routing.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace binsim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_vertex(const Graph& g, int v, const char* what) {
    if (v < 0 || v >= g.size()) {
        throw InvalidVertex(std::string(what) + ": vertex " + std::to_string(v) +
                            " not in graph of size " + std::to_string(g.size()));
    }
}

}  // namespace

bool ShortestPathTree::reachable(int v) const {
    return v >= 0 && v < static_cast<int>(dist.size()) && dist[v] < kInf;
}

std::vector<int> Route::stop_vertices() const {
    std::vector<int> out;
    out.reserve(stops.size());
    for (const RouteStop& s : stops) out.push_back(s.vertex);
    return out;
}

ShortestPathTree dijkstra(const Graph& graph, int source) {
    check_vertex(graph, source, "dijkstra");
    for (const Edge& e : graph.edges) {
        if (e.weight < 0.0) {
            throw NegativeWeight("dijkstra: negative edge weight on " + std::to_string(e.u) +
                                 "-" + std::to_string(e.v));
        }
    }

    ShortestPathTree tree;
    tree.source = source;
    tree.dist.assign(graph.size(), kInf);
    tree.prev.assign(graph.size(), -1);
    tree.dist[source] = 0.0;

    const auto adj = graph.adjacency();
    using Entry = std::pair<double, int>;  // (distance, vertex): pops lowest, then smallest id
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    std::vector<bool> settled(graph.size(), false);
    queue.push({0.0, source});

    while (!queue.empty()) {
        const auto [d, u] = queue.top();
        queue.pop();
        if (settled[u]) continue;
        settled[u] = true;
        for (const auto& [v, w] : adj[u]) {
            const double candidate = tree.dist[u] + w;
            if (candidate < tree.dist[v]) {
                tree.dist[v] = candidate;
                tree.prev[v] = u;
                queue.push({candidate, v});
            } else if (candidate == tree.dist[v] && v != source && u < tree.prev[v]) {
                // equal-cost path through a smaller predecessor wins
                tree.prev[v] = u;
            }
        }
    }
    return tree;
}

std::optional<PathResult> shortest_path(const Graph& graph, int s, int t) {
    check_vertex(graph, t, "shortest_path");
    const ShortestPathTree tree = dijkstra(graph, s);
    if (!tree.reachable(t)) return std::nullopt;

    PathResult result;
    result.cost = tree.dist[t];
    for (int v = t; v != -1; v = tree.prev[v]) result.path.push_back(v);
    std::reverse(result.path.begin(), result.path.end());
    return result;
}

Route plan_tour(const Graph& graph, int start, const std::vector<FullBin>& full_bins,
                int dump, int truck_capacity, int current_load) {
    check_vertex(graph, start, "plan_tour");
    check_vertex(graph, dump, "plan_tour");
    if (full_bins.empty()) {
        throw SimError("plan_tour: no full bins to plan for");
    }
    for (const FullBin& b : full_bins) {
        check_vertex(graph, b.vertex, "plan_tour");
        if (b.load > truck_capacity) {
            throw SimError("plan_tour: bin " + std::to_string(b.bin_id) + " load " +
                           std::to_string(b.load) + " exceeds truck capacity " +
                           std::to_string(truck_capacity));
        }
    }

    Route route;
    route.stops.push_back({start, StopKind::Start, -1});

    std::vector<FullBin> remaining = full_bins;
    std::sort(remaining.begin(), remaining.end(),
              [](const FullBin& a, const FullBin& b) { return a.bin_id < b.bin_id; });

    int cursor = start;
    int projected = current_load;

    auto append_leg = [&](const ShortestPathTree& tree, int to) {
        RouteLeg leg;
        leg.from = cursor;
        leg.to = to;
        leg.distance = tree.dist[to];
        for (int v = to; v != -1; v = tree.prev[v]) leg.path.push_back(v);
        std::reverse(leg.path.begin(), leg.path.end());
        route.total_distance += leg.distance;
        route.legs.push_back(std::move(leg));
        cursor = to;
    };

    while (!remaining.empty()) {
        ShortestPathTree tree = dijkstra(graph, cursor);
        if (!tree.reachable(dump)) {
            throw UnreachableStop("plan_tour: dump unreachable from vertex " +
                                  std::to_string(cursor));
        }
        // nearest full bin; ties go to the smaller bin id (remaining is id-sorted)
        std::size_t pick = 0;
        for (std::size_t i = 1; i < remaining.size(); ++i) {
            if (!tree.reachable(remaining[i].vertex)) {
                throw UnreachableStop("plan_tour: bin " + std::to_string(remaining[i].bin_id) +
                                      " unreachable from vertex " + std::to_string(cursor));
            }
            if (tree.dist[remaining[i].vertex] < tree.dist[remaining[pick].vertex]) pick = i;
        }
        if (!tree.reachable(remaining[pick].vertex)) {
            throw UnreachableStop("plan_tour: bin " + std::to_string(remaining[pick].bin_id) +
                                  " unreachable from vertex " + std::to_string(cursor));
        }
        const FullBin chosen = remaining[pick];
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));

        if (projected + chosen.load > truck_capacity) {
            append_leg(tree, dump);
            route.stops.push_back({dump, StopKind::Dump, -1});
            projected = 0;
            tree = dijkstra(graph, cursor);
            if (!tree.reachable(chosen.vertex)) {
                throw UnreachableStop("plan_tour: bin " + std::to_string(chosen.bin_id) +
                                      " unreachable from the dump");
            }
        }
        append_leg(tree, chosen.vertex);
        route.stops.push_back({chosen.vertex, StopKind::Pickup, chosen.bin_id});
        route.planned_pickups.push_back(chosen.bin_id);
        projected += chosen.load;
    }

    if (projected > 0) {
        ShortestPathTree tree = dijkstra(graph, cursor);
        if (!tree.reachable(dump)) {
            throw UnreachableStop("plan_tour: dump unreachable from vertex " +
                                  std::to_string(cursor));
        }
        append_leg(tree, dump);
        route.stops.push_back({dump, StopKind::Dump, -1});
    }
    return route;
}

}  // namespace binsim
