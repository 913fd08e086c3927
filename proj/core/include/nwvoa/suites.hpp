#ifndef NWVOA_SUITES_HPP
#define NWVOA_SUITES_HPP

#include "nwvoa/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nwvoa::suites {

struct SuiteConfig {
    std::string suite;
    std::optional<long> max_weight;
    std::optional<long> charge_window;
    std::map<std::string, std::string> params; // exact fraction strings
    std::optional<std::string> frame_file;
};

const std::vector<std::string>& suite_names();

/* Runs one named suite and returns its check records.  Unknown suites and
 * malformed parameters throw std::invalid_argument. */
std::vector<report::CheckRecord> run_suite(const SuiteConfig& config);

} // namespace nwvoa::suites

#endif
