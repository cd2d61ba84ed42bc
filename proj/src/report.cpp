#include "binsim/report.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "binsim/config.hpp"
#include "binsim/version.hpp"

namespace binsim {

std::string format_double(double value) {
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, ptr);
}

std::string levels_csv(const SimResult& result) {
    std::ostringstream out;
    out << "tick,bin_id,level,state\n";
    for (const TickRecord& record : result.records) {
        for (const BinSnapshot& bin : record.bins) {
            out << record.tick << ',' << bin.id << ',' << bin.level << ',' << to_string(bin.state)
                << '\n';
        }
    }
    return out.str();
}

std::string ledger_csv(const SimResult& result) {
    std::ostringstream out;
    out << "tick,bin_id,citizen_id,units,amount\n";
    for (const LedgerEntry& entry : result.ledger) {
        out << entry.tick << ',' << entry.bin_id << ',' << entry.citizen_id << ',' << entry.units
            << ',' << entry.amount << '\n';
    }
    return out.str();
}

std::string summary_text(const SimResult& result) {
    const Metrics& m = result.metrics;
    std::ostringstream out;
    out << "bins = " << result.config.world.bin_count << "\n";
    out << "ticks = " << result.config.ticks << "\n";
    out << "full_bins_final = "
        << (result.records.empty() ? 0 : result.records.back().full_bins_uncollected) << "\n";
    out << "total_units_collected = " << m.total_units_collected << "\n";
    out << "total_units_dumped = " << m.total_units_dumped << "\n";
    out << "total_revenue = " << m.total_revenue << "\n";
    out << "total_trip_cost = " << m.total_trip_cost << "\n";
    out << "total_distance = " << format_double(m.total_distance) << "\n";
    out << "mean_collection_delay = " << format_double(m.mean_collection_delay) << "\n";
    out << "max_collection_delay = " << m.max_collection_delay << "\n";
    out << "trips = " << m.trips << "\n";
    return out.str();
}

std::string manifest_text(const SimResult& result, const std::vector<std::string>& outputs) {
    std::ostringstream out;
    out << "# binsim run manifest, version " << kVersion << "\n";
    out << "# resolved configuration; rerun with `binsim run --config <this file>`\n";
    for (const std::string& path : outputs) {
        out << "# output " << path << "\n";
    }
    out << serialize_config(result.config);
    return out.str();
}

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << content;
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace

void export_levels_csv(const SimResult& result, const std::string& path) {
    write_file(path, levels_csv(result));
}

void export_ledger_csv(const SimResult& result, const std::string& path) {
    write_file(path, ledger_csv(result));
}

void write_summary(const SimResult& result, const std::string& path) {
    write_file(path, summary_text(result));
}

void write_manifest(const SimResult& result, const std::vector<std::string>& outputs,
                    const std::string& path) {
    write_file(path, manifest_text(result, outputs));
}

}  // namespace binsim
