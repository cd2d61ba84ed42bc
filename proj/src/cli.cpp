#include "binsim/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>

#include "binsim/config.hpp"
#include "binsim/report.hpp"
#include "binsim/version.hpp"

namespace binsim {

namespace {

const char* kConfigSchema =
    "config file schema (key = value, '#' comments, all keys optional):\n"
    "  bin_count            bins in the world (default 25)\n"
    "  bounds               world rectangle 'xmin ymin xmax ymax' (default -12 -12 12 12)\n"
    "  depot                truck depot 'x y' (default 0 0)\n"
    "  dump                 dump site 'x y' (default 12 12)\n"
    "  graph_mode           complete | explicit (default complete)\n"
    "  bin_capacity         waste units per bin (default 25)\n"
    "  yellow_threshold     alert level, 0 < t < bin_capacity (default 10)\n"
    "  truck_count          trucks in the fleet (default 1)\n"
    "  truck_capacity       waste units per truck (default 100)\n"
    "  fill_model           unit | bernoulli (default bernoulli)\n"
    "  fill_rate_min/max    bernoulli rate range drawn per bin (default 0.2 0.8)\n"
    "  fill_rates           explicit per-bin rates, space separated\n"
    "  price_per_unit       amount charged per collected waste unit (default 500)\n"
    "  trip_cost            flat cost per completed truck trip (default 0)\n"
    "  dispatch_threshold   full bins needed to trigger dispatch (default 1)\n"
    "  ticks                simulated minutes (default 53)\n"
    "  seed                 64-bit run seed (default 42)\n"
    "  citizen_step         citizen walk step per tick (default 1)\n"
    "  [graph]              section of 'u v weight' edges for explicit mode\n";

std::optional<std::uint64_t> env_seed() {
    const char* raw = std::getenv("BINSIM_SEED");
    if (raw == nullptr) return std::nullopt;
    std::uint64_t value = 0;
    const char* end = raw + std::string_view(raw).size();
    const auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw SchemaError("BINSIM_SEED is not a valid unsigned integer: '" + std::string(raw) +
                              "'",
                          "seed");
    }
    return value;
}

// Explicit-mode connectivity can be checked without placing bins: edge
// structure only depends on bin_count.
void check_graph(const SimConfig& config) {
    if (config.world.graph_mode != GraphMode::ExplicitEdgeList) return;
    std::vector<Position> dummy(static_cast<std::size_t>(config.world.bin_count));
    build_graph(dummy, config.world);
}

int cmd_run(const std::string& config_path, std::optional<std::uint64_t> seed_flag,
            std::optional<Tick> ticks_flag, const std::string& out_dir) {
    SimConfig config;
    try {
        config = load_config(config_path);
        if (const auto seed = env_seed()) config.seed = *seed;
        if (seed_flag) config.seed = *seed_flag;
        if (ticks_flag) {
            config.ticks = *ticks_flag;
            validate(config);
        }
        check_graph(config);
    } catch (const SimError& e) {
        std::cerr << "binsim run: " << e.what() << "\n\n" << kConfigSchema;
        return 1;
    }

    try {
        const SimResult result = run(config);
        std::filesystem::create_directories(out_dir);
        const auto path = [&](const char* name) {
            return (std::filesystem::path(out_dir) / name).string();
        };
        const std::vector<std::string> outputs = {path("levels.csv"), path("ledger.csv"),
                                                  path("summary.txt"), path("manifest.txt")};
        export_levels_csv(result, outputs[0]);
        export_ledger_csv(result, outputs[1]);
        write_summary(result, outputs[2]);
        write_manifest(result, outputs, outputs[3]);
        std::cout << summary_text(result);
        for (const std::string& p : outputs) std::cout << "wrote " << p << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "binsim run: " << e.what() << "\n";
        return 2;
    }
}

int cmd_plan(const std::string& graph_path, const std::string& start_label,
             const std::vector<std::string>& bin_labels, const std::string& dump_label,
             int capacity, int bin_load) {
    Graph graph;
    int start = -1;
    int dump = -1;
    std::vector<FullBin> bins;
    try {
        graph = load_graph_file(graph_path);
        start = graph.find_label(start_label);
        if (start == -1) throw SchemaError("unknown start vertex '" + start_label + "'", "start");
        dump = graph.find_label(dump_label);
        if (dump == -1) throw SchemaError("unknown dump vertex '" + dump_label + "'", "dump");
        graph.vertices[static_cast<std::size_t>(dump)].kind = VertexKind::Dump;
        graph.dump_vertex = dump;
        for (std::size_t i = 0; i < bin_labels.size(); ++i) {
            const int v = graph.find_label(bin_labels[i]);
            if (v == -1) {
                throw SchemaError("unknown bin vertex '" + bin_labels[i] + "'", "bins");
            }
            bins.push_back({static_cast<int>(i), v, bin_load});
        }
        if (bins.empty()) throw SchemaError("no bins given", "bins");
    } catch (const SimError& e) {
        std::cerr << "binsim plan: " << e.what() << "\n";
        return 1;
    }

    try {
        const Route route = plan_tour(graph, start, bins, dump, capacity, 0);
        std::cout << "stops:";
        for (const RouteStop& stop : route.stops) {
            std::cout << ' ' << graph.vertices[static_cast<std::size_t>(stop.vertex)].label;
        }
        std::cout << "\npickups:";
        for (int bin_id : route.planned_pickups) {
            const int v = bins[static_cast<std::size_t>(bin_id)].vertex;
            std::cout << ' ' << graph.vertices[static_cast<std::size_t>(v)].label;
        }
        std::cout << "\ntotal_distance = " << format_double(route.total_distance) << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "binsim plan: " << e.what() << "\n";
        return 2;
    }
}

int cmd_validate(const std::string& config_path) {
    try {
        const SimConfig config = load_config(config_path);
        check_graph(config);
        std::cout << "ok\n" << serialize_config(config);
        return 0;
    } catch (const SimError& e) {
        std::cerr << "binsim validate: " << e.what() << "\n\n" << kConfigSchema;
        return 1;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"IoT smart waste bin monitoring and collection simulator"};
    app.set_version_flag("--version", std::string("binsim ") + kVersion);
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::uint64_t> seed_flag;
    std::optional<Tick> ticks_flag;
    std::string out_dir = ".";
    CLI::App* run_cmd = app.add_subcommand("run", "run a simulation and write its outputs");
    run_cmd->add_option("--config", config_path, "config file path")->required();
    run_cmd->add_option("--seed", seed_flag, "override the run seed");
    run_cmd->add_option("--ticks", ticks_flag, "override the horizon");
    run_cmd->add_option("--out", out_dir, "output directory")->capture_default_str();

    std::string graph_path, start_label, dump_label;
    std::vector<std::string> bin_labels;
    int capacity = 0;
    int bin_load = 25;
    CLI::App* plan_cmd = app.add_subcommand("plan", "plan a one-shot collection tour");
    plan_cmd->add_option("--graph", graph_path, "graph file path")->required();
    plan_cmd->add_option("--start", start_label, "start vertex label")->required();
    plan_cmd->add_option("--bins", bin_labels, "full-bin vertex labels (comma separated)")
        ->required()
        ->delimiter(',');
    plan_cmd->add_option("--dump", dump_label, "dump vertex label")->required();
    plan_cmd->add_option("--capacity", capacity, "truck capacity in waste units")->required();
    plan_cmd->add_option("--load", bin_load, "load per full bin")->capture_default_str();

    std::string validate_path;
    CLI::App* validate_cmd = app.add_subcommand("validate", "check a config without running");
    validate_cmd->add_option("--config", validate_path, "config file path")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (run_cmd->parsed()) return cmd_run(config_path, seed_flag, ticks_flag, out_dir);
    if (plan_cmd->parsed()) return cmd_plan(graph_path, start_label, bin_labels, dump_label,
                                            capacity, bin_load);
    return cmd_validate(validate_path);
}

}  // namespace binsim
