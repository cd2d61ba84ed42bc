#include "binsim/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <string_view>

#include "binsim/format.hpp"

namespace binsim {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string token;
    while (in >> token) out.push_back(token);
    return out;
}

template <typename T>
T parse_number(const std::string& token, int line) {
    T value{};
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError("not a valid number: '" + token + "'", line);
    }
    return value;
}

template <typename T>
T parse_single(const std::string& value, int line) {
    const auto tokens = split_ws(value);
    if (tokens.size() != 1) throw ParseError("expected a single value, got '" + value + "'", line);
    return parse_number<T>(tokens[0], line);
}

struct KeyHandlers {
    std::map<std::string, void (*)(SimConfig&, const std::string&, int)> table;
};

const KeyHandlers& handlers() {
    static const KeyHandlers h = [] {
        KeyHandlers k;
        auto& t = k.table;
        t["bin_count"] = [](SimConfig& c, const std::string& v, int ln) {
            c.world.bin_count = parse_single<int>(v, ln);
        };
        t["bounds"] = [](SimConfig& c, const std::string& v, int ln) {
            const auto tok = split_ws(v);
            if (tok.size() != 4) throw ParseError("bounds needs 'xmin ymin xmax ymax'", ln);
            c.world.bounds = {parse_number<double>(tok[0], ln), parse_number<double>(tok[1], ln),
                              parse_number<double>(tok[2], ln), parse_number<double>(tok[3], ln)};
        };
        t["depot"] = [](SimConfig& c, const std::string& v, int ln) {
            const auto tok = split_ws(v);
            if (tok.size() != 2) throw ParseError("depot needs 'x y'", ln);
            c.world.depot_position = {parse_number<double>(tok[0], ln),
                                      parse_number<double>(tok[1], ln)};
        };
        t["dump"] = [](SimConfig& c, const std::string& v, int ln) {
            const auto tok = split_ws(v);
            if (tok.size() != 2) throw ParseError("dump needs 'x y'", ln);
            c.world.dump_position = {parse_number<double>(tok[0], ln),
                                     parse_number<double>(tok[1], ln)};
        };
        t["graph_mode"] = [](SimConfig& c, const std::string& v, int ln) {
            if (v == "complete") {
                c.world.graph_mode = GraphMode::CompleteEuclidean;
            } else if (v == "explicit") {
                c.world.graph_mode = GraphMode::ExplicitEdgeList;
            } else {
                throw ParseError("graph_mode must be 'complete' or 'explicit'", ln);
            }
        };
        t["bin_capacity"] = [](SimConfig& c, const std::string& v, int ln) {
            c.bin_capacity = parse_single<int>(v, ln);
        };
        t["yellow_threshold"] = [](SimConfig& c, const std::string& v, int ln) {
            c.yellow_threshold = parse_single<int>(v, ln);
        };
        t["truck_count"] = [](SimConfig& c, const std::string& v, int ln) {
            c.truck_count = parse_single<int>(v, ln);
        };
        t["truck_capacity"] = [](SimConfig& c, const std::string& v, int ln) {
            c.truck_capacity = parse_single<int>(v, ln);
        };
        t["fill_model"] = [](SimConfig& c, const std::string& v, int ln) {
            if (v == "unit") {
                c.fill.kind = FillModel::Kind::DeterministicUnit;
            } else if (v == "bernoulli") {
                c.fill.kind = FillModel::Kind::BernoulliPerBin;
            } else {
                throw ParseError("fill_model must be 'unit' or 'bernoulli'", ln);
            }
        };
        t["fill_rate_min"] = [](SimConfig& c, const std::string& v, int ln) {
            c.fill.rate_min = parse_single<double>(v, ln);
        };
        t["fill_rate_max"] = [](SimConfig& c, const std::string& v, int ln) {
            c.fill.rate_max = parse_single<double>(v, ln);
        };
        t["fill_rates"] = [](SimConfig& c, const std::string& v, int ln) {
            c.fill.explicit_rates.clear();
            for (const auto& tok : split_ws(v)) {
                c.fill.explicit_rates.push_back(parse_number<double>(tok, ln));
            }
        };
        t["price_per_unit"] = [](SimConfig& c, const std::string& v, int ln) {
            c.tariff.price_per_unit = parse_single<Currency>(v, ln);
        };
        t["trip_cost"] = [](SimConfig& c, const std::string& v, int ln) {
            c.tariff.fixed_trip_cost = parse_single<Currency>(v, ln);
        };
        t["dispatch_threshold"] = [](SimConfig& c, const std::string& v, int ln) {
            c.dispatch_threshold = parse_single<int>(v, ln);
        };
        t["ticks"] = [](SimConfig& c, const std::string& v, int ln) {
            c.ticks = parse_single<Tick>(v, ln);
        };
        t["seed"] = [](SimConfig& c, const std::string& v, int ln) {
            c.seed = parse_single<std::uint64_t>(v, ln);
        };
        t["citizen_step"] = [](SimConfig& c, const std::string& v, int ln) {
            c.citizen_step = parse_single<double>(v, ln);
        };
        return k;
    }();
    return h;
}

std::string strip_comment(const std::string& line) {
    const auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

SimConfig parse_config(std::istream& in) {
    SimConfig config;
    std::string raw;
    int line_no = 0;
    bool in_graph_section = false;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;
        if (line == "[graph]") {
            in_graph_section = true;
            continue;
        }
        if (line.front() == '[') throw ParseError("unknown section '" + line + "'", line_no);
        if (in_graph_section) {
            const auto tok = split_ws(line);
            if (tok.size() != 3) throw ParseError("graph edge needs 'u v weight'", line_no);
            config.world.explicit_edges.push_back({parse_number<int>(tok[0], line_no),
                                                   parse_number<int>(tok[1], line_no),
                                                   parse_number<double>(tok[2], line_no)});
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'key = value'", line_no);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto it = handlers().table.find(key);
        if (it == handlers().table.end()) {
            throw SchemaError("unknown config key '" + key + "'", key);
        }
        it->second(config, value, line_no);
    }
    validate(config);
    return config;
}

SimConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    return parse_config(in);
}

std::string serialize_config(const SimConfig& c) {
    std::ostringstream out;
    out << "bin_count = " << c.world.bin_count << "\n";
    out << "bounds = " << format_double(c.world.bounds.xmin) << " "
        << format_double(c.world.bounds.ymin) << " " << format_double(c.world.bounds.xmax) << " "
        << format_double(c.world.bounds.ymax) << "\n";
    out << "depot = " << format_double(c.world.depot_position.x) << " "
        << format_double(c.world.depot_position.y) << "\n";
    out << "dump = " << format_double(c.world.dump_position.x) << " "
        << format_double(c.world.dump_position.y) << "\n";
    out << "graph_mode = "
        << (c.world.graph_mode == GraphMode::CompleteEuclidean ? "complete" : "explicit") << "\n";
    out << "bin_capacity = " << c.bin_capacity << "\n";
    out << "yellow_threshold = " << c.yellow_threshold << "\n";
    out << "truck_count = " << c.truck_count << "\n";
    out << "truck_capacity = " << c.truck_capacity << "\n";
    out << "fill_model = "
        << (c.fill.kind == FillModel::Kind::DeterministicUnit ? "unit" : "bernoulli") << "\n";
    out << "fill_rate_min = " << format_double(c.fill.rate_min) << "\n";
    out << "fill_rate_max = " << format_double(c.fill.rate_max) << "\n";
    if (!c.fill.explicit_rates.empty()) {
        out << "fill_rates =";
        for (double r : c.fill.explicit_rates) out << " " << format_double(r);
        out << "\n";
    }
    out << "price_per_unit = " << c.tariff.price_per_unit << "\n";
    out << "trip_cost = " << c.tariff.fixed_trip_cost << "\n";
    out << "dispatch_threshold = " << c.dispatch_threshold << "\n";
    out << "ticks = " << c.ticks << "\n";
    out << "seed = " << c.seed << "\n";
    out << "citizen_step = " << format_double(c.citizen_step) << "\n";
    if (!c.world.explicit_edges.empty()) {
        out << "[graph]\n";
        for (const Edge& e : c.world.explicit_edges) {
            out << e.u << " " << e.v << " " << format_double(e.weight) << "\n";
        }
    }
    return out.str();
}

Graph parse_graph_file(std::istream& in) {
    Graph g;
    std::vector<Edge> edges;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;
        const auto tok = split_ws(line);
        if (tok[0] == "vertex") {
            if (tok.size() != 4) throw ParseError("vertex needs 'vertex LABEL X Y'", line_no);
            if (g.find_label(tok[1]) != -1) {
                throw ParseError("duplicate vertex label '" + tok[1] + "'", line_no);
            }
            g.vertices.push_back({g.size(), tok[1],
                                  {parse_number<double>(tok[2], line_no),
                                   parse_number<double>(tok[3], line_no)},
                                  VertexKind::BinSite});
        } else if (tok[0] == "edge") {
            if (tok.size() != 4) throw ParseError("edge needs 'edge A B WEIGHT'", line_no);
            const int u = g.find_label(tok[1]);
            const int v = g.find_label(tok[2]);
            if (u == -1 || v == -1) throw ParseError("edge references unknown vertex", line_no);
            const double w = parse_number<double>(tok[3], line_no);
            if (w < 0.0) throw ParseError("edge weight must be non-negative", line_no);
            edges.push_back({u, v, w});
        } else {
            throw ParseError("expected 'vertex' or 'edge', got '" + tok[0] + "'", line_no);
        }
    }
    if (g.vertices.empty()) throw ParseError("graph file declares no vertices", 0);
    if (edges.empty()) {
        // no explicit edges: complete graph over Euclidean distances
        for (int u = 0; u < g.size(); ++u) {
            for (int v = u + 1; v < g.size(); ++v) {
                g.edges.push_back(
                    {u, v, euclidean(g.vertices[u].position, g.vertices[v].position)});
            }
        }
    } else {
        g.edges = std::move(edges);
    }
    return g;
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open graph file: " + path);
    return parse_graph_file(in);
}

}  // namespace binsim
