#include "binsim/fleet.hpp"

namespace binsim {

void assign_route(Truck& truck, Route route) {
    if (truck.status == TruckStatus::EnRoute) {
        throw TruckBusy("assign_route: truck " + std::to_string(truck.id) + " is en route");
    }
    if (route.stops.empty() || route.stops.front().vertex != truck.vertex) {
        throw RouteMismatch("assign_route: route does not start at truck " +
                            std::to_string(truck.id) + "'s vertex " +
                            std::to_string(truck.vertex));
    }
    truck.cursor = 0;
    if (route.stops.size() == 1) {
        // degenerate single-stop route; nothing to drive
        truck.route.reset();
        truck.status = TruckStatus::Idle;
        return;
    }
    truck.route = std::move(route);
    truck.status = TruckStatus::EnRoute;
}

CollectionEvent collect(Truck& truck, Bin& bin, Tick tick) {
    if (truck.vertex != bin.vertex) {
        throw SimError("collect: truck " + std::to_string(truck.id) + " at vertex " +
                       std::to_string(truck.vertex) + " but bin " + std::to_string(bin.id) +
                       " at vertex " + std::to_string(bin.vertex));
    }
    if (truck.load + bin.level > truck.capacity) {
        throw CapacityWouldExceed("collect: truck " + std::to_string(truck.id) + " load " +
                                  std::to_string(truck.load) + " + bin " +
                                  std::to_string(bin.id) + " level " +
                                  std::to_string(bin.level) + " exceeds capacity " +
                                  std::to_string(truck.capacity));
    }
    const int removed = empty_bin(bin);
    truck.load += removed;
    return CollectionEvent{tick, truck.id, bin.id, removed, truck.vertex};
}

AdvanceEvents advance(Truck& truck, std::vector<Bin>& bins, Tick tick) {
    if (truck.status != TruckStatus::EnRoute || !truck.route) {
        throw NotEnRoute("advance: truck " + std::to_string(truck.id) + " is idle");
    }
    const Route& route = *truck.route;
    truck.odometer += route.legs[truck.cursor].distance;
    ++truck.cursor;
    const RouteStop& stop = route.stops[truck.cursor];
    truck.vertex = stop.vertex;

    AdvanceEvents out;
    if (stop.kind == StopKind::Pickup) {
        Bin& bin = bins.at(static_cast<std::size_t>(stop.bin_id));
        out.collected_full_since = bin.full_since;
        out.collection = collect(truck, bin, tick);
    } else if (stop.kind == StopKind::Dump && truck.load > 0) {
        out.dump = DumpEvent{tick, truck.id, truck.load};
        truck.load = 0;
        ++truck.trips;
    }

    if (truck.cursor + 1 >= route.stops.size()) {
        truck.route.reset();
        truck.cursor = 0;
        truck.status = TruckStatus::Idle;
    }
    return out;
}

}  // namespace binsim
