#pragma once

#include <string>
#include <vector>

#include "binsim/engine.hpp"
#include "binsim/format.hpp"

namespace binsim {

// header "tick,bin_id,level,state", one row per (tick, bin), ordered by tick
// then bin id, '\n' line ends. Byte-identical across reruns of the same run.
std::string levels_csv(const SimResult& result);

// header "tick,bin_id,citizen_id,units,amount", one row per ledger entry.
std::string ledger_csv(const SimResult& result);

// "key = value" lines: bins, ticks, full_bins_final, total_units_collected,
// total_units_dumped, total_revenue, total_trip_cost, total_distance,
// mean_collection_delay, max_collection_delay, trips.
std::string summary_text(const SimResult& result);

// Resolved config echo (loadable by load_config) prefixed with version and
// output-path comments; a run is reproducible from the manifest alone.
std::string manifest_text(const SimResult& result, const std::vector<std::string>& outputs);

void export_levels_csv(const SimResult& result, const std::string& path);
void export_ledger_csv(const SimResult& result, const std::string& path);
void write_summary(const SimResult& result, const std::string& path);
void write_manifest(const SimResult& result, const std::vector<std::string>& outputs,
                    const std::string& path);

}  // namespace binsim
