#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "binsim/bins.hpp"
#include "binsim/routing.hpp"

namespace binsim {

enum class TruckStatus { Idle, EnRoute };

struct Truck {
    int id = 0;
    int vertex = 0;
    int capacity = 100;
    int load = 0;
    std::optional<Route> route;
    std::size_t cursor = 0;  // index into route->stops
    double odometer = 0.0;
    std::int64_t trips = 0;  // completed dump visits
    TruckStatus status = TruckStatus::Idle;
};

struct CollectionEvent {
    Tick tick = 0;
    int truck_id = 0;
    int bin_id = 0;
    int units = 0;
    int vertex = 0;
};

struct DumpEvent {
    Tick tick = 0;
    int truck_id = 0;
    int units = 0;
};

struct AdvanceEvents {
    std::optional<CollectionEvent> collection;
    std::optional<DumpEvent> dump;
    // full_since of the collected bin before it was emptied; drives the delay metric.
    std::optional<Tick> collected_full_since;
};

// Puts an Idle truck on a route whose first stop is the truck's current vertex.
void assign_route(Truck& truck, Route route);

// Moves an EnRoute truck one stop forward, collecting or dumping at that stop.
// The truck goes Idle after processing the final stop. bins is indexed by bin id.
AdvanceEvents advance(Truck& truck, std::vector<Bin>& bins, Tick tick);

// Empties the bin into the truck. Requires the truck at the bin's vertex and
// room for the bin's whole level; violating capacity means the planner is broken.
CollectionEvent collect(Truck& truck, Bin& bin, Tick tick);

}  // namespace binsim
