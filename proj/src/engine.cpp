#include "binsim/engine.hpp"

#include <algorithm>
#include <string>

namespace binsim {

void validate(const SimConfig& config) {
    const auto fail = [](const std::string& msg, const std::string& key) {
        throw SchemaError(msg, key);
    };
    if (config.world.bin_count < 1) fail("bin_count must be at least 1", "bin_count");
    const Bounds& b = config.world.bounds;
    if (!(b.xmin < b.xmax) || !(b.ymin < b.ymax)) fail("bounds must be non-degenerate", "bounds");
    if (config.bin_capacity < 1) fail("bin_capacity must be positive", "bin_capacity");
    if (config.yellow_threshold <= 0 || config.yellow_threshold >= config.bin_capacity) {
        fail("yellow_threshold must satisfy 0 < yellow_threshold < bin_capacity",
             "yellow_threshold");
    }
    if (config.truck_count < 1) fail("truck_count must be at least 1", "truck_count");
    if (config.truck_capacity < 1) fail("truck_capacity must be positive", "truck_capacity");
    if (config.bin_capacity > config.truck_capacity) {
        fail("bin_capacity must not exceed truck_capacity", "truck_capacity");
    }
    if (config.dispatch_threshold < 1) {
        fail("dispatch_threshold must be at least 1", "dispatch_threshold");
    }
    if (config.ticks < 0) fail("ticks must be non-negative", "ticks");
    if (config.citizen_step < 0.0) fail("citizen_step must be non-negative", "citizen_step");
    if (!(config.fill.rate_min >= 0.0 && config.fill.rate_max <= 1.0 &&
          config.fill.rate_min <= config.fill.rate_max)) {
        fail("fill rates must satisfy 0 <= fill_rate_min <= fill_rate_max <= 1", "fill_rate_min");
    }
    if (!config.fill.explicit_rates.empty()) {
        if (static_cast<int>(config.fill.explicit_rates.size()) != config.world.bin_count) {
            fail("fill_rates must list one rate per bin", "fill_rates");
        }
        for (double r : config.fill.explicit_rates) {
            if (!(r >= 0.0 && r <= 1.0)) fail("fill_rates entries must lie in [0,1]", "fill_rates");
        }
    }
    if (config.tariff.price_per_unit < 0) fail("price_per_unit must be non-negative",
                                               "price_per_unit");
    if (config.tariff.fixed_trip_cost < 0) fail("trip_cost must be non-negative", "trip_cost");
    if (config.world.graph_mode == GraphMode::ExplicitEdgeList &&
        config.world.explicit_edges.empty()) {
        fail("explicit graph mode requires a [graph] section", "graph_mode");
    }
}

namespace {

void append_record(SimState& state) {
    TickRecord record;
    record.tick = state.now;
    record.bins.reserve(state.bins.size());
    int red = 0;
    for (const Bin& bin : state.bins) {
        record.bins.push_back({bin.id, bin.level, bin.state});
        if (bin.state == BinState::Red) ++red;
    }
    record.full_bins_uncollected = red;
    record.trucks.reserve(state.trucks.size());
    for (const Truck& truck : state.trucks) {
        record.trucks.push_back({truck.id, truck.load, truck.status});
    }
    record.cumulative_revenue = state.revenue;
    record.cumulative_units_generated = state.units_generated;
    record.cumulative_units_dumped = state.units_dumped;
    state.records.push_back(std::move(record));
}

FillModel resolve_fill(const SimConfig& config, RandomStream& rng) {
    if (config.fill.kind == FillModel::Kind::DeterministicUnit) {
        return FillModel::deterministic_unit();
    }
    if (!config.fill.explicit_rates.empty()) {
        return FillModel::bernoulli(config.fill.explicit_rates);
    }
    std::vector<double> rates;
    rates.reserve(static_cast<std::size_t>(config.world.bin_count));
    for (int i = 0; i < config.world.bin_count; ++i) {
        rates.push_back(rng.uniform(config.fill.rate_min, config.fill.rate_max));
    }
    return FillModel::bernoulli(std::move(rates));
}

}  // namespace

SimState init(const SimConfig& config) {
    validate(config);
    SimState state(config.seed);
    state.config = config;
    state.bin_positions = place_bins(config.world, state.rng);
    state.graph = build_graph(state.bin_positions, config.world);
    state.fill = resolve_fill(config, state.rng);

    state.bins.reserve(static_cast<std::size_t>(config.world.bin_count));
    for (int i = 0; i < config.world.bin_count; ++i) {
        Bin bin;
        bin.id = i;
        bin.vertex = i;
        bin.capacity = config.bin_capacity;
        bin.owner = i;
        state.bins.push_back(bin);
    }
    state.trucks.reserve(static_cast<std::size_t>(config.truck_count));
    for (int i = 0; i < config.truck_count; ++i) {
        Truck truck;
        truck.id = i;
        truck.vertex = state.graph.depot_vertex;
        truck.capacity = config.truck_capacity;
        state.trucks.push_back(truck);
    }
    state.citizens.reserve(state.bins.size());
    for (const Bin& bin : state.bins) {
        Citizen citizen;
        citizen.id = bin.id;
        citizen.position = state.bin_positions[static_cast<std::size_t>(bin.id)];
        citizen.owned_bin = bin.id;
        citizen.step_length = config.citizen_step;
        state.citizens.push_back(citizen);
    }
    state.assigned.assign(state.bins.size(), false);
    append_record(state);
    return state;
}

void tick(SimState& state) {
    const Tick t = ++state.now;

    // (1) fill, ascending bin id
    for (Bin& bin : state.bins) {
        const int before = bin.level;
        step_bin(bin, state.config.yellow_threshold, state.fill, state.rng, t);
        state.units_generated += bin.level - before;
    }

    // (2) dispatch: unassigned Red bins round-robin across idle trucks
    std::vector<const Bin*> ready;
    for (const Bin& bin : state.bins) {
        if (bin.state == BinState::Red && !state.assigned[static_cast<std::size_t>(bin.id)]) {
            ready.push_back(&bin);
        }
    }
    std::vector<Truck*> idle;
    for (Truck& truck : state.trucks) {
        if (truck.status == TruckStatus::Idle) idle.push_back(&truck);
    }
    if (static_cast<int>(ready.size()) >= state.config.dispatch_threshold && !idle.empty()) {
        std::vector<std::vector<FullBin>> buckets(idle.size());
        for (std::size_t i = 0; i < ready.size(); ++i) {
            const Bin& bin = *ready[i];
            buckets[i % idle.size()].push_back({bin.id, bin.vertex, bin.level});
        }
        for (std::size_t j = 0; j < idle.size(); ++j) {
            if (buckets[j].empty()) continue;
            Route route = plan_tour(state.graph, idle[j]->vertex, buckets[j],
                                    state.graph.dump_vertex, idle[j]->capacity, idle[j]->load);
            assign_route(*idle[j], std::move(route));
            for (const FullBin& b : buckets[j]) {
                state.assigned[static_cast<std::size_t>(b.bin_id)] = true;
            }
        }
    }

    // (3) move trucks, ascending truck id
    for (Truck& truck : state.trucks) {
        if (truck.status != TruckStatus::EnRoute) continue;
        const AdvanceEvents ev = advance(truck, state.bins, t);
        if (ev.collection) {
            const CollectionEvent& c = *ev.collection;
            state.assigned[static_cast<std::size_t>(c.bin_id)] = false;
            if (c.units > 0) {
                state.events.emplace_back(c);
                const int owner = state.bins[static_cast<std::size_t>(c.bin_id)].owner;
                const Currency amount = charge(c.units, state.config.tariff);
                state.ledger.push_back({t, c.bin_id, owner, c.units, amount});
                state.citizens[static_cast<std::size_t>(owner)].balance_paid += amount;
                state.revenue += amount;
                state.units_collected += c.units;
                if (ev.collected_full_since) {
                    const Tick delay = t - *ev.collected_full_since;
                    state.delay_sum += delay;
                    state.delay_count += 1;
                    state.delay_max = std::max(state.delay_max, delay);
                }
            }
        }
        if (ev.dump) {
            state.events.emplace_back(*ev.dump);
            state.units_dumped += ev.dump->units;
        }
    }

    // (4) citizens, ascending id
    for (Citizen& citizen : state.citizens) {
        move_citizen(citizen, state.rng, state.config.world.bounds);
    }

    // (5) record
    append_record(state);
}

int full_bins_uncollected(const SimState& state) {
    int red = 0;
    for (const Bin& bin : state.bins) {
        if (bin.state == BinState::Red) ++red;
    }
    return red;
}

SimResult run(const SimConfig& config) {
    SimState state = init(config);
    for (Tick i = 0; i < config.ticks; ++i) tick(state);

    SimResult result;
    result.config = state.config;
    result.records = std::move(state.records);
    result.events = std::move(state.events);
    result.ledger = std::move(state.ledger);

    Metrics& m = result.metrics;
    m.total_revenue = state.revenue;
    for (const Truck& truck : state.trucks) {
        m.trips += truck.trips;
        m.total_distance += truck.odometer;
    }
    m.total_trip_cost = trip_cost(m.trips, config.tariff);
    m.total_units_collected = state.units_collected;
    m.total_units_dumped = state.units_dumped;
    m.max_collection_delay = state.delay_max;
    m.mean_collection_delay =
        state.delay_count > 0
            ? static_cast<double>(state.delay_sum) / static_cast<double>(state.delay_count)
            : 0.0;
    return result;
}

}  // namespace binsim
