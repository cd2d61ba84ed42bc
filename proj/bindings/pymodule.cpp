#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "binsim/cli.hpp"
#include "binsim/config.hpp"
#include "binsim/engine.hpp"
#include "binsim/report.hpp"
#include "binsim/version.hpp"

namespace py = pybind11;
using namespace binsim;

PYBIND11_MODULE(_binsim, m) {
    m.doc() = "IoT smart waste bin monitoring and collection simulator";
    m.attr("__version__") = kVersion;

    py::register_exception<SimError>(m, "SimulationError");

    // world
    py::class_<Position>(m, "Position")
        .def(py::init<>())
        .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
        .def_readwrite("x", &Position::x)
        .def_readwrite("y", &Position::y)
        .def("__repr__", [](const Position& p) {
            return "Position(" + format_double(p.x) + ", " + format_double(p.y) + ")";
        });

    py::class_<Bounds>(m, "Bounds")
        .def(py::init<>())
        .def(py::init<double, double, double, double>(), py::arg("xmin"), py::arg("ymin"),
             py::arg("xmax"), py::arg("ymax"))
        .def_readwrite("xmin", &Bounds::xmin)
        .def_readwrite("ymin", &Bounds::ymin)
        .def_readwrite("xmax", &Bounds::xmax)
        .def_readwrite("ymax", &Bounds::ymax)
        .def("contains", &Bounds::contains);

    py::enum_<VertexKind>(m, "VertexKind")
        .value("BinSite", VertexKind::BinSite)
        .value("Dump", VertexKind::Dump)
        .value("Depot", VertexKind::Depot);

    py::class_<Vertex>(m, "Vertex")
        .def_readonly("id", &Vertex::id)
        .def_readonly("label", &Vertex::label)
        .def_readonly("position", &Vertex::position)
        .def_readonly("kind", &Vertex::kind);

    py::class_<Edge>(m, "Edge")
        .def(py::init<>())
        .def(py::init<int, int, double>(), py::arg("u"), py::arg("v"), py::arg("weight"))
        .def_readwrite("u", &Edge::u)
        .def_readwrite("v", &Edge::v)
        .def_readwrite("weight", &Edge::weight);

    py::class_<Graph>(m, "Graph")
        .def(py::init<>())
        .def_readonly("vertices", &Graph::vertices)
        .def_readonly("edges", &Graph::edges)
        .def_readonly("dump_vertex", &Graph::dump_vertex)
        .def_readonly("depot_vertex", &Graph::depot_vertex)
        .def("size", &Graph::size)
        .def("find_label", &Graph::find_label);

    py::enum_<GraphMode>(m, "GraphMode")
        .value("CompleteEuclidean", GraphMode::CompleteEuclidean)
        .value("ExplicitEdgeList", GraphMode::ExplicitEdgeList);

    py::class_<WorldConfig>(m, "WorldConfig")
        .def(py::init<>())
        .def_readwrite("bin_count", &WorldConfig::bin_count)
        .def_readwrite("bounds", &WorldConfig::bounds)
        .def_readwrite("dump_position", &WorldConfig::dump_position)
        .def_readwrite("depot_position", &WorldConfig::depot_position)
        .def_readwrite("graph_mode", &WorldConfig::graph_mode)
        .def_readwrite("explicit_edges", &WorldConfig::explicit_edges);

    m.def(
        "place_bins",
        [](const WorldConfig& config, std::uint64_t seed) {
            RandomStream rng(seed);
            return place_bins(config, rng);
        },
        py::arg("config"), py::arg("seed"));
    m.def("build_graph", &build_graph, py::arg("bin_positions"), py::arg("config"));

    // routing
    py::class_<ShortestPathTree>(m, "ShortestPathTree")
        .def_readonly("source", &ShortestPathTree::source)
        .def_readonly("dist", &ShortestPathTree::dist)
        .def_readonly("prev", &ShortestPathTree::prev)
        .def("reachable", &ShortestPathTree::reachable);

    py::enum_<StopKind>(m, "StopKind")
        .value("Start", StopKind::Start)
        .value("Pickup", StopKind::Pickup)
        .value("Dump", StopKind::Dump);

    py::class_<RouteStop>(m, "RouteStop")
        .def_readonly("vertex", &RouteStop::vertex)
        .def_readonly("kind", &RouteStop::kind)
        .def_readonly("bin_id", &RouteStop::bin_id);

    py::class_<RouteLeg>(m, "RouteLeg")
        .def_readonly("from_vertex", &RouteLeg::from)
        .def_readonly("to_vertex", &RouteLeg::to)
        .def_readonly("path", &RouteLeg::path)
        .def_readonly("distance", &RouteLeg::distance);

    py::class_<Route>(m, "Route")
        .def_readonly("stops", &Route::stops)
        .def_readonly("legs", &Route::legs)
        .def_readonly("total_distance", &Route::total_distance)
        .def_readonly("planned_pickups", &Route::planned_pickups)
        .def("stop_vertices", &Route::stop_vertices);

    py::class_<PathResult>(m, "PathResult")
        .def_readonly("path", &PathResult::path)
        .def_readonly("cost", &PathResult::cost);

    py::class_<FullBin>(m, "FullBin")
        .def(py::init<>())
        .def(py::init<int, int, int>(), py::arg("bin_id"), py::arg("vertex"), py::arg("load"))
        .def_readwrite("bin_id", &FullBin::bin_id)
        .def_readwrite("vertex", &FullBin::vertex)
        .def_readwrite("load", &FullBin::load);

    m.def("dijkstra", &dijkstra, py::arg("graph"), py::arg("source"));
    m.def("shortest_path", &shortest_path, py::arg("graph"), py::arg("s"), py::arg("t"));
    m.def("plan_tour", &plan_tour, py::arg("graph"), py::arg("start"), py::arg("full_bins"),
          py::arg("dump"), py::arg("truck_capacity"), py::arg("current_load") = 0);

    // bins
    py::enum_<BinState>(m, "BinState")
        .value("Green", BinState::Green)
        .value("Yellow", BinState::Yellow)
        .value("Red", BinState::Red);

    m.def("classify_state", &classify_state, py::arg("level"), py::arg("yellow_threshold"),
          py::arg("capacity"));

    // accounting
    py::class_<Tariff>(m, "Tariff")
        .def(py::init<>())
        .def_readwrite("price_per_unit", &Tariff::price_per_unit)
        .def_readwrite("fixed_trip_cost", &Tariff::fixed_trip_cost);

    py::class_<LedgerEntry>(m, "LedgerEntry")
        .def_readonly("tick", &LedgerEntry::tick)
        .def_readonly("bin_id", &LedgerEntry::bin_id)
        .def_readonly("citizen_id", &LedgerEntry::citizen_id)
        .def_readonly("units", &LedgerEntry::units)
        .def_readonly("amount", &LedgerEntry::amount);

    m.def("charge", &charge, py::arg("units"), py::arg("tariff"));
    m.def("total_revenue", &total_revenue, py::arg("ledger"));
    m.def("trip_cost", &trip_cost, py::arg("trips"), py::arg("tariff"));

    // fleet events
    py::enum_<TruckStatus>(m, "TruckStatus")
        .value("Idle", TruckStatus::Idle)
        .value("EnRoute", TruckStatus::EnRoute);

    py::class_<CollectionEvent>(m, "CollectionEvent")
        .def_readonly("tick", &CollectionEvent::tick)
        .def_readonly("truck_id", &CollectionEvent::truck_id)
        .def_readonly("bin_id", &CollectionEvent::bin_id)
        .def_readonly("units", &CollectionEvent::units)
        .def_readonly("vertex", &CollectionEvent::vertex);

    py::class_<DumpEvent>(m, "DumpEvent")
        .def_readonly("tick", &DumpEvent::tick)
        .def_readonly("truck_id", &DumpEvent::truck_id)
        .def_readonly("units", &DumpEvent::units);

    // engine
    py::class_<FillConfig>(m, "FillConfig")
        .def(py::init<>())
        .def_readwrite("kind", &FillConfig::kind)
        .def_readwrite("rate_min", &FillConfig::rate_min)
        .def_readwrite("rate_max", &FillConfig::rate_max)
        .def_readwrite("explicit_rates", &FillConfig::explicit_rates);

    py::enum_<FillModel::Kind>(m, "FillKind")
        .value("DeterministicUnit", FillModel::Kind::DeterministicUnit)
        .value("BernoulliPerBin", FillModel::Kind::BernoulliPerBin);

    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init<>())
        .def_readwrite("world", &SimConfig::world)
        .def_readwrite("bin_capacity", &SimConfig::bin_capacity)
        .def_readwrite("yellow_threshold", &SimConfig::yellow_threshold)
        .def_readwrite("truck_count", &SimConfig::truck_count)
        .def_readwrite("truck_capacity", &SimConfig::truck_capacity)
        .def_readwrite("fill", &SimConfig::fill)
        .def_readwrite("tariff", &SimConfig::tariff)
        .def_readwrite("dispatch_threshold", &SimConfig::dispatch_threshold)
        .def_readwrite("ticks", &SimConfig::ticks)
        .def_readwrite("seed", &SimConfig::seed)
        .def_readwrite("citizen_step", &SimConfig::citizen_step);

    py::class_<BinSnapshot>(m, "BinSnapshot")
        .def_readonly("id", &BinSnapshot::id)
        .def_readonly("level", &BinSnapshot::level)
        .def_readonly("state", &BinSnapshot::state);

    py::class_<TruckSnapshot>(m, "TruckSnapshot")
        .def_readonly("id", &TruckSnapshot::id)
        .def_readonly("load", &TruckSnapshot::load)
        .def_readonly("status", &TruckSnapshot::status);

    py::class_<TickRecord>(m, "TickRecord")
        .def_readonly("tick", &TickRecord::tick)
        .def_readonly("bins", &TickRecord::bins)
        .def_readonly("full_bins_uncollected", &TickRecord::full_bins_uncollected)
        .def_readonly("trucks", &TickRecord::trucks)
        .def_readonly("cumulative_revenue", &TickRecord::cumulative_revenue)
        .def_readonly("cumulative_units_generated", &TickRecord::cumulative_units_generated)
        .def_readonly("cumulative_units_dumped", &TickRecord::cumulative_units_dumped);

    py::class_<Metrics>(m, "Metrics")
        .def_readonly("total_revenue", &Metrics::total_revenue)
        .def_readonly("total_trip_cost", &Metrics::total_trip_cost)
        .def_readonly("total_distance", &Metrics::total_distance)
        .def_readonly("mean_collection_delay", &Metrics::mean_collection_delay)
        .def_readonly("max_collection_delay", &Metrics::max_collection_delay)
        .def_readonly("total_units_collected", &Metrics::total_units_collected)
        .def_readonly("total_units_dumped", &Metrics::total_units_dumped)
        .def_readonly("trips", &Metrics::trips);

    py::class_<SimResult>(m, "SimResult")
        .def_readonly("config", &SimResult::config)
        .def_readonly("records", &SimResult::records)
        .def_readonly("events", &SimResult::events)
        .def_readonly("ledger", &SimResult::ledger)
        .def_readonly("metrics", &SimResult::metrics);

    m.def("validate", &validate, py::arg("config"));
    m.def("run", &run, py::arg("config"), py::call_guard<py::gil_scoped_release>());

    // interface
    m.def("load_config", &load_config, py::arg("path"));
    m.def("serialize_config", &serialize_config, py::arg("config"));
    m.def("load_graph_file", &load_graph_file, py::arg("path"));
    m.def("levels_csv", &levels_csv, py::arg("result"));
    m.def("ledger_csv", &ledger_csv, py::arg("result"));
    m.def("summary_text", &summary_text, py::arg("result"));
    m.def("export_levels_csv", &export_levels_csv, py::arg("result"), py::arg("path"));
    m.def("export_ledger_csv", &export_ledger_csv, py::arg("result"), py::arg("path"));
    m.def("write_summary", &write_summary, py::arg("result"), py::arg("path"));
    m.def("run_cli", &run_cli, py::arg("args"));
}
