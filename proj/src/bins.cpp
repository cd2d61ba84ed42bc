#include "binsim/bins.hpp"

namespace binsim {

std::string_view to_string(BinState state) {
    switch (state) {
        case BinState::Green: return "green";
        case BinState::Yellow: return "yellow";
        case BinState::Red: return "red";
    }
    return "green";
}

BinState classify_state(int level, int yellow_threshold, int capacity) {
    if (yellow_threshold <= 0 || yellow_threshold >= capacity) {
        throw InvalidThresholds("classify_state: need 0 < yellow_threshold < capacity, got " +
                                std::to_string(yellow_threshold) + " / " +
                                std::to_string(capacity));
    }
    if (level < yellow_threshold) return BinState::Green;
    if (level < capacity) return BinState::Yellow;
    return BinState::Red;
}

void step_bin(Bin& bin, int yellow_threshold, const FillModel& model, RandomStream& rng,
              Tick tick) {
    int grow = 1;
    if (model.kind == FillModel::Kind::BernoulliPerBin) {
        // one draw per bin per tick, consumed even at capacity
        grow = rng.bernoulli(model.rates.at(static_cast<std::size_t>(bin.id))) ? 1 : 0;
    }
    if (grow > 0 && bin.level < bin.capacity) {
        bin.level += grow;
        if (bin.level >= bin.capacity && !bin.full_since) bin.full_since = tick;
    }
    bin.state = classify_state(bin.level, yellow_threshold, bin.capacity);
}

int empty_bin(Bin& bin) {
    const int removed = bin.level;
    bin.level = 0;
    bin.state = BinState::Green;
    bin.full_since.reset();
    return removed;
}

}  // namespace binsim
