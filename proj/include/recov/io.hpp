#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "recov/experiment.hpp"
#include "recov/model.hpp"
#include "recov/solvers.hpp"

namespace recov::io {

// {"nodes": [{"id": 1, "v0": "0.3", "w": "3", "inc": "0.9", "dec": "0.4"}, ...]}
Scenario parse_scenario(const std::string& json_text);
std::string serialize_scenario(const Scenario& scenario);
Scenario load_scenario(const std::filesystem::path& path);
void save_scenario(const std::filesystem::path& path, const Scenario& scenario);

// Header t,action,v_1..v_N,status_1..status_N; row 0 has an empty action.
void write_trace_csv(std::ostream& os, const Trace& trace);
std::string trace_csv(const Trace& trace);
// Rows only; milestone vectors are not recoverable from the CSV and stay empty.
std::vector<TraceRow> parse_trace_csv(const std::string& text);

// Header repaired_count,frequency; rows ascending by count.
std::string histogram_csv(const Histogram& histogram);

std::string solve_result_json(const SolveResult& result);

void write_file(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

}  // namespace recov::io
