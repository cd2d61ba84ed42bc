#include "binsim/accounting.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace binsim {

Currency charge(int units, const Tariff& tariff) {
    return static_cast<Currency>(units) * tariff.price_per_unit;
}

Currency total_revenue(const std::vector<LedgerEntry>& ledger) {
    Currency total = 0;
    for (const LedgerEntry& entry : ledger) total += entry.amount;
    return total;
}

Currency trip_cost(std::int64_t trips, const Tariff& tariff) {
    return trips * tariff.fixed_trip_cost;
}

void move_citizen(Citizen& citizen, RandomStream& rng, const Bounds& bounds) {
    const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
    citizen.position.x += citizen.step_length * std::cos(angle);
    citizen.position.y += citizen.step_length * std::sin(angle);
    citizen.position.x = std::clamp(citizen.position.x, bounds.xmin, bounds.xmax);
    citizen.position.y = std::clamp(citizen.position.y, bounds.ymin, bounds.ymax);
}

}  // namespace binsim
