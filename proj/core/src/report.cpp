#include "nwvoa/report.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace nwvoa::report {

nlohmann::json to_json(const std::string& suite, std::vector<CheckRecord> records) {
    std::stable_sort(records.begin(), records.end(),
                     [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
    bool all = true;
    nlohmann::json recs = nlohmann::json::array();
    for (auto& r : records) {
        all = all && r.pass;
        nlohmann::json item;
        item["name"] = r.name;
        item["pass"] = r.pass;
        if (!r.detail.empty()) item["detail"] = r.detail;
        if (!r.data.empty()) item["data"] = r.data;
        recs.push_back(std::move(item));
    }
    nlohmann::json doc;
    doc["schema"] = "nwvoa-report/1";
    doc["suite"] = suite;
    doc["pass"] = all;
    doc["records"] = std::move(recs);
    return doc;
}

std::string render(const std::string& suite, std::vector<CheckRecord> records) {
    return to_json(suite, std::move(records)).dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& payload) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open report file: " + path);
    out << payload;
    if (!out) throw std::ios_base::failure("cannot write report file: " + path);
}

} // namespace nwvoa::report
