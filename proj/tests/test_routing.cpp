#include "doctest.h"

#include <cmath>

#include "binsim/routing.hpp"
#include "oracles.hpp"

using namespace binsim;

namespace {

Graph complete_graph(const std::vector<Position>& points) {
    Graph g;
    for (std::size_t i = 0; i < points.size(); ++i) {
        g.vertices.push_back({static_cast<int>(i), "V" + std::to_string(i), points[i],
                              VertexKind::BinSite});
    }
    for (int u = 0; u < g.size(); ++u) {
        for (int v = u + 1; v < g.size(); ++v) {
            g.edges.push_back({u, v, euclidean(points[u], points[v])});
        }
    }
    return g;
}

Graph triangle() {
    Graph g;
    for (int i = 0; i < 3; ++i) {
        g.vertices.push_back({i, "V" + std::to_string(i), {0.0, 0.0}, VertexKind::BinSite});
    }
    g.edges = {{0, 1, 1.0}, {1, 2, 2.0}, {0, 2, 4.0}};
    return g;
}

}  // namespace

TEST_CASE("dijkstra on a weighted triangle") {
    const Graph g = triangle();
    const ShortestPathTree tree = dijkstra(g, 0);
    CHECK(tree.source == 0);
    CHECK(tree.dist == std::vector<double>{0.0, 1.0, 3.0});  // 0->1->2 beats the direct edge
    CHECK(tree.prev[0] == -1);
    CHECK(tree.prev[1] == 0);
    CHECK(tree.prev[2] == 1);
    CHECK(tree.reachable(2));
}

TEST_CASE("dijkstra equal-cost tie goes to the smaller predecessor") {
    Graph g;
    for (int i = 0; i < 4; ++i) {
        g.vertices.push_back({i, "V" + std::to_string(i), {0.0, 0.0}, VertexKind::BinSite});
    }
    g.edges = {{0, 2, 1.0}, {0, 1, 1.0}, {2, 3, 1.0}, {1, 3, 1.0}};  // diamond, both paths cost 2
    const ShortestPathTree tree = dijkstra(g, 0);
    CHECK(tree.dist[3] == 2.0);
    CHECK(tree.prev[3] == 1);
}

TEST_CASE("dijkstra flags unreachable vertices") {
    Graph g;
    for (int i = 0; i < 3; ++i) {
        g.vertices.push_back({i, "V" + std::to_string(i), {0.0, 0.0}, VertexKind::BinSite});
    }
    g.edges = {{0, 1, 1.0}};
    const ShortestPathTree tree = dijkstra(g, 0);
    CHECK(!tree.reachable(2));
    CHECK(tree.prev[2] == -1);
    CHECK(!shortest_path(g, 0, 2).has_value());
}

TEST_CASE("dijkstra input validation") {
    const Graph g = triangle();
    CHECK_THROWS_AS(dijkstra(g, 9), InvalidVertex);
    CHECK_THROWS_AS(dijkstra(g, -1), InvalidVertex);
    Graph bad = g;
    bad.edges[0].weight = -1.0;
    CHECK_THROWS_AS(dijkstra(bad, 0), NegativeWeight);
}

TEST_CASE("dijkstra matches the floyd-warshall oracle") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const int n = 2 + static_cast<int>(seed % 30);
        const Graph g = oracle::random_graph(n, seed);
        const auto want = oracle::all_pairs(g);
        for (int s = 0; s < n; ++s) {
            const ShortestPathTree tree = dijkstra(g, s);
            for (int t = 0; t < n; ++t) {
                CHECK(tree.dist[t] == want[s][t]);  // integer weights: sums are exact
            }
        }
    }
}

TEST_CASE("shortest_path reconstructs a valid walk") {
    for (std::uint64_t seed = 100; seed < 120; ++seed) {
        const Graph g = oracle::random_graph(10, seed);
        const auto adj = g.adjacency();
        for (int t = 0; t < g.size(); ++t) {
            const auto result = shortest_path(g, 0, t);
            REQUIRE(result.has_value());
            REQUIRE(!result->path.empty());
            CHECK(result->path.front() == 0);
            CHECK(result->path.back() == t);
            double walked = 0.0;
            for (std::size_t i = 0; i + 1 < result->path.size(); ++i) {
                const int u = result->path[i];
                const int v = result->path[i + 1];
                double w = -1.0;  // cheapest edge: the generator can emit parallel edges
                for (const auto& [nbr, weight] : adj[u]) {
                    if (nbr == v && (w < 0.0 || weight < w)) w = weight;
                }
                REQUIRE(w >= 0.0);  // consecutive path vertices share an edge
                walked += w;
            }
            CHECK(walked == result->cost);
        }
    }
}

TEST_CASE("plan_tour nearest-neighbor pickup order") {
    // square-ish layout: start and a bin at the origin, bins west and east,
    // dump to the north-east
    const Graph g = complete_graph({{0.0, 0.0}, {-4.5, 0.0}, {9.0, 0.0}, {9.0, 9.0}});
    const std::vector<FullBin> bins = {{0, 0, 25}, {1, 1, 25}, {2, 2, 25}};
    const Route route = plan_tour(g, 0, bins, 3, 100, 0);

    CHECK(route.planned_pickups == std::vector<int>{0, 1, 2});
    CHECK(route.stop_vertices() == std::vector<int>{0, 0, 1, 2, 3});
    REQUIRE(route.stops.size() == 5);
    CHECK(route.stops[0].kind == StopKind::Start);
    CHECK(route.stops[1].kind == StopKind::Pickup);
    CHECK(route.stops[4].kind == StopKind::Dump);
    REQUIRE(route.legs.size() == 4);
    CHECK(route.legs[0].distance == 0.0);
    CHECK(route.legs[1].distance == 4.5);
    CHECK(route.legs[2].distance == 13.5);
    CHECK(route.legs[3].distance == 9.0);
    CHECK(route.total_distance == 27.0);
    for (std::size_t i = 0; i + 1 < route.stops.size(); ++i) {
        CHECK(route.legs[i].from == route.stops[i].vertex);
        CHECK(route.legs[i].to == route.stops[i + 1].vertex);
        CHECK(route.legs[i].path.front() == route.legs[i].from);
        CHECK(route.legs[i].path.back() == route.legs[i].to);
    }
}

TEST_CASE("plan_tour inserts dump stops at capacity") {
    // five full bins of 25 against a 100-unit truck: dump before the fifth
    // pickup plus the final drain
    const Graph g = complete_graph({{1.0, 0.0},
                                    {2.0, 0.0},
                                    {3.0, 0.0},
                                    {4.0, 0.0},
                                    {5.0, 0.0},
                                    {8.0, 0.0},
                                    {0.0, 0.0}});
    std::vector<FullBin> bins;
    for (int i = 0; i < 5; ++i) bins.push_back({i, i, 25});
    const Route route = plan_tour(g, 6, bins, 5, 100, 0);

    int dumps = 0;
    for (const RouteStop& s : route.stops) {
        if (s.kind == StopKind::Dump) ++dumps;
    }
    CHECK(dumps == 2);
    CHECK(route.planned_pickups == std::vector<int>{0, 1, 2, 3, 4});
    // dump comes right before the pickup that would overflow
    CHECK(route.stops[5].kind == StopKind::Dump);
    CHECK(route.stops[6].bin_id == 4);
    CHECK(route.stops[7].kind == StopKind::Dump);
}

TEST_CASE("plan_tour respects current load") {
    const Graph g = complete_graph({{1.0, 0.0}, {2.0, 0.0}, {0.0, 0.0}});
    const std::vector<FullBin> bins = {{0, 0, 25}};
    const Route route = plan_tour(g, 2, bins, 1, 100, 90);  // 90 + 25 > 100
    REQUIRE(route.stops.size() >= 2);
    CHECK(route.stops[1].kind == StopKind::Dump);
    CHECK(route.stops[2].kind == StopKind::Pickup);
}

TEST_CASE("plan_tour ties break on bin id") {
    // two bins equidistant from the start
    const Graph g = complete_graph({{1.0, 0.0}, {-1.0, 0.0}, {0.0, 0.0}, {0.0, 5.0}});
    const std::vector<FullBin> bins = {{0, 1, 25}, {1, 0, 25}};  // bin 0 west, bin 1 east
    const Route route = plan_tour(g, 2, bins, 3, 100, 0);
    CHECK(route.planned_pickups == std::vector<int>{0, 1});
}

TEST_CASE("plan_tour input validation") {
    const Graph g = complete_graph({{1.0, 0.0}, {0.0, 0.0}});
    CHECK_THROWS_AS(plan_tour(g, 1, {}, 0, 100, 0), SimError);
    CHECK_THROWS_AS(plan_tour(g, 1, {{0, 0, 200}}, 0, 100, 0), SimError);  // bin beats capacity
    CHECK_THROWS_AS(plan_tour(g, 9, {{0, 0, 25}}, 0, 100, 0), InvalidVertex);
}

TEST_CASE("plan_tour throws when a stop is unreachable") {
    Graph g;
    for (int i = 0; i < 3; ++i) {
        g.vertices.push_back({i, "V" + std::to_string(i), {0.0, 0.0}, VertexKind::BinSite});
    }
    g.edges = {{0, 2, 1.0}};  // bin at vertex 1 is isolated
    CHECK_THROWS_AS(plan_tour(g, 0, {{0, 1, 25}}, 2, 100, 0), UnreachableStop);
}

TEST_CASE("plan_tour pickups are a permutation and never overflow on replay") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const Graph g = oracle::random_graph(12, seed);
        std::mt19937_64 eng(seed * 977);
        std::uniform_int_distribution<int> load(1, 40);
        std::uniform_int_distribution<int> vertex(0, 10);
        const int capacity = 60;
        std::vector<FullBin> bins;
        const int k = 1 + static_cast<int>(seed % 8);
        for (int i = 0; i < k; ++i) bins.push_back({i, vertex(eng), load(eng)});

        const Route route = plan_tour(g, 11, bins, 11, capacity, 0);

        std::vector<int> seen(bins.size(), 0);
        int carried = 0;
        for (const RouteStop& s : route.stops) {
            if (s.kind == StopKind::Pickup) {
                carried += bins[static_cast<std::size_t>(s.bin_id)].load;
                CHECK(carried <= capacity);
                seen[static_cast<std::size_t>(s.bin_id)] += 1;
            } else if (s.kind == StopKind::Dump) {
                carried = 0;
            }
        }
        for (int count : seen) CHECK(count == 1);
        CHECK(carried == 0);  // every tour ends drained
    }
}

TEST_CASE("plan_tour never beats the exhaustive oracle") {
    for (std::uint64_t seed = 50; seed < 70; ++seed) {
        const Graph g = oracle::random_graph(9, seed);
        std::mt19937_64 eng(seed);
        std::uniform_int_distribution<int> load(5, 30);
        std::uniform_int_distribution<int> vertex(0, 7);
        std::vector<FullBin> bins;
        const int k = 2 + static_cast<int>(seed % 5);
        for (int i = 0; i < k; ++i) bins.push_back({i, vertex(eng), load(eng)});

        const Route route = plan_tour(g, 8, bins, 8, 60, 0);
        const double best = oracle::best_tour_cost(g, 8, 8, bins, 60, 0);
        CHECK(route.total_distance >= best - 1e-9);
    }
}
