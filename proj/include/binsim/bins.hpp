#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "binsim/errors.hpp"
#include "binsim/rng.hpp"

namespace binsim {

using Tick = std::int64_t;

enum class BinState { Green, Yellow, Red };

std::string_view to_string(BinState state);

struct Bin {
    int id = 0;
    int vertex = 0;
    int capacity = 25;
    int level = 0;
    BinState state = BinState::Green;
    int owner = 0;  // citizen id
    std::optional<Tick> full_since;
};

// DeterministicUnit grows every bin by one unit per tick; BernoulliPerBin grows
// bin i by one unit with probability rates[i]. Bernoulli consumes exactly one
// draw per bin per tick, full or not, so the stream stays aligned with bin ids.
struct FillModel {
    enum class Kind { DeterministicUnit, BernoulliPerBin };

    Kind kind = Kind::DeterministicUnit;
    std::vector<double> rates;  // indexed by bin id, BernoulliPerBin only

    static FillModel deterministic_unit() { return {}; }
    static FillModel bernoulli(std::vector<double> per_bin_rates) {
        return {Kind::BernoulliPerBin, std::move(per_bin_rates)};
    }
};

// level < yellow_threshold: Green; level < capacity: Yellow; else Red.
// Requires 0 < yellow_threshold < capacity.
BinState classify_state(int level, int yellow_threshold, int capacity);

// One tick of fill. Saturates at capacity; stamps full_since the first time the
// level reaches capacity since the last emptying.
void step_bin(Bin& bin, int yellow_threshold, const FillModel& model, RandomStream& rng,
              Tick tick);

// Drains the bin back to level 0 / Green and returns the removed units.
int empty_bin(Bin& bin);

}  // namespace binsim
