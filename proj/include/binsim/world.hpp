#pragma once

#include <string>
#include <utility>
#include <vector>

#include "binsim/errors.hpp"
#include "binsim/rng.hpp"

namespace binsim {

struct Position {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Position&) const = default;
};

struct Bounds {
    double xmin = -12.0;
    double ymin = -12.0;
    double xmax = 12.0;
    double ymax = 12.0;

    bool contains(Position p) const {
        return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
    }

    bool operator==(const Bounds&) const = default;
};

enum class VertexKind { BinSite, Dump, Depot };

struct Vertex {
    int id = 0;
    std::string label;
    Position position;
    VertexKind kind = VertexKind::BinSite;
};

struct Edge {
    int u = 0;
    int v = 0;
    double weight = 0.0;

    bool operator==(const Edge&) const = default;
};

// Undirected weighted graph over dense vertex ids 0..n-1. dump_vertex and
// depot_vertex may name the same vertex when the two sites coincide.
struct Graph {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    int dump_vertex = -1;
    int depot_vertex = -1;

    int size() const { return static_cast<int>(vertices.size()); }

    // Neighbor lists sorted by (neighbor id, weight) so relaxation order is fixed.
    std::vector<std::vector<std::pair<int, double>>> adjacency() const;

    // Vertex id for a label, or -1.
    int find_label(const std::string& label) const;
};

enum class GraphMode { CompleteEuclidean, ExplicitEdgeList };

struct WorldConfig {
    int bin_count = 25;
    Bounds bounds;
    Position dump_position{12.0, 12.0};
    Position depot_position{0.0, 0.0};
    GraphMode graph_mode = GraphMode::CompleteEuclidean;
    std::vector<Edge> explicit_edges;  // ExplicitEdgeList mode only

    bool operator==(const WorldConfig&) const = default;
};

// Bins closer than this are considered coincident and re-drawn.
inline constexpr double kMinBinSeparation = 0.5;
inline constexpr int kMaxPlacementAttempts = 10000;

double euclidean(Position a, Position b);

// Uniformly samples bin_count positions inside config.bounds, pairwise at least
// kMinBinSeparation apart. Throws PlacementExhausted after kMaxPlacementAttempts draws.
std::vector<Position> place_bins(const WorldConfig& config, RandomStream& rng);

// One vertex per bin (ids 0..n-1, labels "B0".."Bn-1"), then the dump and the
// depot. Coincident dump/depot positions collapse into a single vertex.
// CompleteEuclidean links every vertex pair at Euclidean distance; ExplicitEdgeList
// takes config.explicit_edges verbatim and requires every vertex reachable from
// the depot.
Graph build_graph(const std::vector<Position>& bin_positions, const WorldConfig& config);

}  // namespace binsim
