#pragma once

#include <stdexcept>
#include <string>

namespace binsim {

struct SimError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// world
struct PlacementExhausted : SimError {
    using SimError::SimError;
};
struct DisconnectedGraph : SimError {
    using SimError::SimError;
};

// routing
struct InvalidVertex : SimError {
    using SimError::SimError;
};
struct NegativeWeight : SimError {
    using SimError::SimError;
};
// Thrown by plan_tour when a full bin or the dump cannot be reached.
// shortest_path signals unreachability via an empty optional instead.
struct UnreachableStop : SimError {
    using SimError::SimError;
};

// bins
struct InvalidThresholds : SimError {
    using SimError::SimError;
};

// fleet
struct TruckBusy : SimError {
    using SimError::SimError;
};
struct RouteMismatch : SimError {
    using SimError::SimError;
};
struct NotEnRoute : SimError {
    using SimError::SimError;
};
struct CapacityWouldExceed : SimError {
    using SimError::SimError;
};

// interface
struct ParseError : SimError {
    ParseError(const std::string& msg, int line_number)
        : SimError(msg + " (line " + std::to_string(line_number) + ")"), line(line_number) {}
    int line;
};
struct SchemaError : SimError {
    SchemaError(const std::string& msg, std::string key_name)
        : SimError(msg), key(std::move(key_name)) {}
    std::string key;
};
struct IoError : SimError {
    using SimError::SimError;
};

}  // namespace binsim
