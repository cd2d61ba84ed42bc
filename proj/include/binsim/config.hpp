#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "binsim/engine.hpp"

namespace binsim {

// Flat "key = value" config file with an optional [graph] section of
// "u v weight" edge lines (see README for the key list). Unknown keys are
// rejected; missing keys keep their defaults. Throws ParseError (with line
// number), SchemaError (naming the key) or IoError.
SimConfig load_config(const std::string& path);
SimConfig parse_config(std::istream& in);

// Fully-resolved config as loadable text; parse_config round-trips it exactly.
std::string serialize_config(const SimConfig& config);

// Labeled graph for the `plan` subcommand: "vertex LABEL X Y" lines plus
// optional "edge LABEL LABEL WEIGHT" lines. Without edge lines the graph is
// complete with Euclidean weights. Vertex kinds are left as BinSite; the
// caller marks dump/depot roles by label.
Graph load_graph_file(const std::string& path);
Graph parse_graph_file(std::istream& in);

}  // namespace binsim
