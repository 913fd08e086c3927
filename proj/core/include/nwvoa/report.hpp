#ifndef NWVOA_REPORT_HPP
#define NWVOA_REPORT_HPP

#include <json.hpp>

#include <string>
#include <vector>

namespace nwvoa::report {

struct CheckRecord {
    std::string name;
    bool pass = true;
    std::string detail;
    nlohmann::json data = nlohmann::json::object();
};

/* Deterministic report document: records sorted by name, keys sorted (the
 * json object type is ordered), all numerics emitted as exact strings. */
nlohmann::json to_json(const std::string& suite, std::vector<CheckRecord> records);
std::string render(const std::string& suite, std::vector<CheckRecord> records);
void write_file(const std::string& path, const std::string& payload);

} // namespace nwvoa::report

#endif
