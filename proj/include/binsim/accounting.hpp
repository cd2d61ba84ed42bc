#pragma once

#include <cstdint>
#include <vector>

#include "binsim/bins.hpp"
#include "binsim/rng.hpp"
#include "binsim/world.hpp"

namespace binsim {

using Currency = std::int64_t;  // whole currency units, nothing fractional

struct Citizen {
    int id = 0;
    Position position;
    int owned_bin = 0;
    Currency balance_paid = 0;
    double step_length = 1.0;  // grid units per tick
};

struct Tariff {
    Currency price_per_unit = 500;  // charged per collected waste unit
    Currency fixed_trip_cost = 0;   // flat charge per completed truck trip

    bool operator==(const Tariff&) const = default;
};

struct LedgerEntry {
    Tick tick = 0;
    int bin_id = 0;
    int citizen_id = 0;
    int units = 0;
    Currency amount = 0;  // units * price_per_unit, exact
};

Currency charge(int units, const Tariff& tariff);
Currency total_revenue(const std::vector<LedgerEntry>& ledger);
Currency trip_cost(std::int64_t trips, const Tariff& tariff);

// Random-walk step, clamped to bounds. Purely cosmetic; consumes exactly one
// draw per call so the run stream stays aligned.
void move_citizen(Citizen& citizen, RandomStream& rng, const Bounds& bounds);

}  // namespace binsim
