#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "config.hpp"

namespace cli {

struct Report {
    nlohmann::ordered_json json;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
    bool pass = true;
    std::string summary;
};

Report cmd_algebra(const RunConfig& cfg);
Report cmd_spectrum(const RunConfig& cfg);
Report cmd_sweep(const RunConfig& cfg);
Report cmd_symmetry(const RunConfig& cfg);
Report cmd_ground(const RunConfig& cfg);
Report cmd_converge(const RunConfig& cfg);

Report run(const RunConfig& cfg);

/// Full file contents; the timestamp is omitted when empty.
std::string render(const Report& report, Format format, const std::string& timestamp);

}  // namespace cli
