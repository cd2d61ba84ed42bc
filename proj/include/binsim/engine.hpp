#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "binsim/accounting.hpp"
#include "binsim/bins.hpp"
#include "binsim/fleet.hpp"
#include "binsim/routing.hpp"
#include "binsim/world.hpp"

namespace binsim {

struct FillConfig {
    FillModel::Kind kind = FillModel::Kind::BernoulliPerBin;
    double rate_min = 0.2;
    double rate_max = 0.8;
    // When non-empty, used verbatim (one rate per bin) instead of drawing from
    // [rate_min, rate_max] at setup.
    std::vector<double> explicit_rates;

    bool operator==(const FillConfig&) const = default;
};

struct SimConfig {
    WorldConfig world;
    int bin_capacity = 25;
    int yellow_threshold = 10;
    int truck_count = 1;
    int truck_capacity = 100;
    FillConfig fill;
    Tariff tariff;
    int dispatch_threshold = 1;  // full bins required to trigger tour planning
    Tick ticks = 53;             // horizon in minutes
    std::uint64_t seed = 42;
    double citizen_step = 1.0;

    bool operator==(const SimConfig&) const = default;
};

// Throws SchemaError naming the offending key when the config is inconsistent.
void validate(const SimConfig& config);

struct BinSnapshot {
    int id = 0;
    int level = 0;
    BinState state = BinState::Green;
};

struct TruckSnapshot {
    int id = 0;
    int load = 0;
    TruckStatus status = TruckStatus::Idle;
};

struct TickRecord {
    Tick tick = 0;
    std::vector<BinSnapshot> bins;
    int full_bins_uncollected = 0;  // Red bins at end of tick
    std::vector<TruckSnapshot> trucks;
    Currency cumulative_revenue = 0;
    // Running totals of fill increments and dumped units; together with the
    // snapshots these make the conservation identity checkable per tick.
    std::int64_t cumulative_units_generated = 0;
    std::int64_t cumulative_units_dumped = 0;
};

using SimEvent = std::variant<CollectionEvent, DumpEvent>;

struct Metrics {
    Currency total_revenue = 0;
    Currency total_trip_cost = 0;
    double total_distance = 0.0;
    double mean_collection_delay = 0.0;
    Tick max_collection_delay = 0;
    std::int64_t total_units_collected = 0;
    std::int64_t total_units_dumped = 0;
    std::int64_t trips = 0;
};

struct SimResult {
    SimConfig config;
    std::vector<TickRecord> records;  // one per tick plus the tick-0 snapshot
    std::vector<SimEvent> events;
    std::vector<LedgerEntry> ledger;
    Metrics metrics;
};

// Whole simulation state; owned by the single-threaded tick loop.
struct SimState {
    SimConfig config;
    Graph graph;
    std::vector<Position> bin_positions;
    FillModel fill;
    std::vector<Bin> bins;        // index == bin id
    std::vector<Truck> trucks;    // index == truck id
    std::vector<Citizen> citizens;
    RandomStream rng;
    Tick now = 0;

    std::vector<TickRecord> records;
    std::vector<SimEvent> events;
    std::vector<LedgerEntry> ledger;
    std::vector<bool> assigned;  // bin id -> currently on some truck's route

    std::int64_t units_generated = 0;
    std::int64_t units_collected = 0;
    std::int64_t units_dumped = 0;
    Currency revenue = 0;
    std::int64_t delay_sum = 0;
    std::int64_t delay_count = 0;
    Tick delay_max = 0;

    explicit SimState(std::uint64_t seed) : rng(seed) {}
};

// Places bins, builds the graph, draws fill rates, creates trucks at the depot
// and one citizen per bin, and emits the tick-0 record. All randomness comes
// from one stream seeded with config.seed.
SimState init(const SimConfig& config);

// One tick: (1) fill bins by ascending id, (2) dispatch idle trucks when enough
// unassigned full bins exist, (3) advance trucks, (4) move citizens, (5) record.
void tick(SimState& state);

// Runs the configured horizon and aggregates metrics.
SimResult run(const SimConfig& config);

// Count of bins currently in the Red state.
int full_bins_uncollected(const SimState& state);

}  // namespace binsim
