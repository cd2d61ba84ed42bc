#include "doctest.h"

#include "binsim/world.hpp"

using namespace binsim;

TEST_CASE("euclidean distance") {
    CHECK(euclidean({0.0, 0.0}, {3.0, 4.0}) == 5.0);
    CHECK(euclidean({1.0, 1.0}, {1.0, 1.0}) == 0.0);
    CHECK(euclidean({-3.0, 0.0}, {0.0, -4.0}) == 5.0);
}

TEST_CASE("place_bins basics") {
    WorldConfig config;
    config.bin_count = 25;
    RandomStream rng(42);
    const auto positions = place_bins(config, rng);
    REQUIRE(positions.size() == 25);
    for (const Position& p : positions) CHECK(config.bounds.contains(p));
    for (std::size_t i = 0; i < positions.size(); ++i) {
        for (std::size_t j = i + 1; j < positions.size(); ++j) {
            CHECK(euclidean(positions[i], positions[j]) >= kMinBinSeparation);
        }
    }
}

TEST_CASE("place_bins is deterministic per seed") {
    WorldConfig config;
    config.bin_count = 10;
    RandomStream a(7), b(7), c(8);
    const auto first = place_bins(config, a);
    const auto second = place_bins(config, b);
    const auto other = place_bins(config, c);
    CHECK(first == second);
    CHECK(first != other);
}

TEST_CASE("place_bins degenerate bounds") {
    // a single bin fits a zero-area world at its only point
    WorldConfig config;
    config.bin_count = 1;
    config.bounds = {0.0, 0.0, 0.0, 0.0};
    RandomStream rng(1);
    const auto positions = place_bins(config, rng);
    REQUIRE(positions.size() == 1);
    CHECK(positions[0] == Position{0.0, 0.0});
}

TEST_CASE("place_bins gives up when the world is too small") {
    WorldConfig config;
    config.bin_count = 2;
    config.bounds = {0.0, 0.0, 0.0, 0.0};  // second bin can never clear the separation
    RandomStream rng(1);
    CHECK_THROWS_AS(place_bins(config, rng), PlacementExhausted);
}

TEST_CASE("build_graph complete euclidean") {
    WorldConfig config;
    config.bin_count = 2;
    config.dump_position = {12.0, 12.0};
    config.depot_position = {0.0, 0.0};
    const std::vector<Position> bins = {{0.0, 0.0}, {3.0, 4.0}};
    const Graph g = build_graph(bins, config);

    REQUIRE(g.size() == 4);  // 2 bins + dump + depot
    CHECK(g.vertices[0].label == "B0");
    CHECK(g.vertices[1].label == "B1");
    CHECK(g.vertices[g.dump_vertex].label == "DUMP");
    CHECK(g.vertices[g.depot_vertex].label == "DEPOT");
    CHECK(g.vertices[g.dump_vertex].kind == VertexKind::Dump);
    CHECK(g.find_label("B1") == 1);
    CHECK(g.find_label("nope") == -1);
    CHECK(g.edges.size() == 6);  // complete on 4 vertices

    // 3-4-5 triangle between the two bins
    bool found = false;
    for (const Edge& e : g.edges) {
        if (e.u == 0 && e.v == 1) {
            CHECK(e.weight == 5.0);
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("build_graph merges coincident dump and depot") {
    WorldConfig config;
    config.bin_count = 1;
    config.dump_position = {5.0, 5.0};
    config.depot_position = {5.0, 5.0};
    const Graph g = build_graph({{0.0, 0.0}}, config);
    CHECK(g.size() == 2);
    CHECK(g.dump_vertex == g.depot_vertex);
    CHECK(g.vertices[g.dump_vertex].kind == VertexKind::Dump);
}

TEST_CASE("build_graph explicit edge list") {
    WorldConfig config;
    config.bin_count = 2;
    config.graph_mode = GraphMode::ExplicitEdgeList;
    const std::vector<Position> bins = {{0.0, 0.0}, {1.0, 0.0}};
    // vertices: B0=0 B1=1 DUMP=2 DEPOT=3

    SUBCASE("valid chain") {
        config.explicit_edges = {{3, 0, 1.0}, {0, 1, 2.0}, {1, 2, 3.0}};
        const Graph g = build_graph(bins, config);
        CHECK(g.edges.size() == 3);
        const auto adj = g.adjacency();
        REQUIRE(adj[0].size() == 2);
        CHECK(adj[0][0].first == 1);  // neighbor lists sorted by id
        CHECK(adj[0][1].first == 3);
    }
    SUBCASE("endpoint out of range") {
        config.explicit_edges = {{3, 0, 1.0}, {0, 1, 2.0}, {1, 9, 3.0}};
        CHECK_THROWS_AS(build_graph(bins, config), InvalidVertex);
    }
    SUBCASE("self loop") {
        config.explicit_edges = {{3, 0, 1.0}, {0, 1, 2.0}, {1, 1, 3.0}};
        CHECK_THROWS_AS(build_graph(bins, config), SimError);
    }
    SUBCASE("negative weight") {
        config.explicit_edges = {{3, 0, 1.0}, {0, 1, 2.0}, {1, 2, -3.0}};
        CHECK_THROWS_AS(build_graph(bins, config), NegativeWeight);
    }
    SUBCASE("disconnected") {
        config.explicit_edges = {{3, 0, 1.0}, {0, 1, 2.0}};  // dump unreachable
        CHECK_THROWS_AS(build_graph(bins, config), DisconnectedGraph);
    }
}
