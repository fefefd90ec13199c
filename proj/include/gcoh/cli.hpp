#pragma once

#include "gcoh/io.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace gcoh {

struct JobSpec {
    std::string command;
    std::vector<std::filesystem::path> inputs;
    std::string coeff = "Z";
    int max_degree = -1;  // -1: command default
    int fiber_order = 0;
    std::size_t cell_cap = 200000;
    std::string out;
    std::string format = "json";
};

struct JobResult {
    int exit_code = 0;
    Json report;
};

const std::vector<std::string>& command_names();

/// Reads a {"kind":"job"} document; relative input paths resolve against `dir`.
JobSpec job_from_json(const Json& doc, const std::filesystem::path& dir);

/// Never throws for bad input or failed preconditions; those become exit codes 1/2/3 with an error report.
JobResult run(const JobSpec& job);

std::string render_json(const Json& report);
std::string render_table(const Json& report);

}  // namespace gcoh
