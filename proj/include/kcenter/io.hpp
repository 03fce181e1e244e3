#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "kcenter/bench.hpp"
#include "kcenter/core.hpp"
#include "kcenter/solvers.hpp"

namespace kcenter {

/// Malformed input file; message names the offending field.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

/// Instance JSON: {"k": int, "customers": [[x,y], ...]}.
std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);
Instance load_instance(const std::filesystem::path& path);
void save_instance(const Instance& inst, const std::filesystem::path& path);

/// Solution JSON: centers, center coordinates, objective, trace.
std::string solution_to_json(const Instance& inst, const Solution& sol,
                             const SolveTrace& trace);
Solution solution_from_json(const std::string& text);
Solution load_solution(const std::filesystem::path& path);

std::string records_csv(const std::vector<ComparisonRecord>& records,
                        const std::string& setup_label);
std::string summary_csv(const CampaignSummary& summary);
std::string geometry_csv(const Instance& inst, const Solution& sol);

void write_file(const std::filesystem::path& path, const std::string& content);

} // namespace kcenter
