#include "nwvoa/frame.hpp"
#include "nwvoa/report.hpp"
#include "nwvoa/suites.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"exact verification suites for the Nappi-Witten free-field realizations"};

    nwvoa::suites::SuiteConfig config;
    std::string suite;
    long max_weight = -1, charge_window = -1;
    std::vector<std::string> params;
    std::string frame_file, out_file;

    app.add_option("--suite", suite, "suite name (see --list)")->required(false);
    app.add_option("--max-weight", max_weight, "weight truncation bound");
    app.add_option("--charge-window", charge_window, "charge window half-width");
    app.add_option("--param", params, "suite parameter as key=value, values exact fractions p/q");
    app.add_option("--frame", frame_file, "frame definition file");
    app.add_option("--out", out_file, "write the JSON report to this path");
    bool list = false;
    app.add_flag("--list", list, "list available suites");

    CLI11_PARSE(app, argc, argv);

    if (list) {
        for (auto& name : nwvoa::suites::suite_names()) std::cout << name << "\n";
        return 0;
    }
    if (suite.empty()) {
        std::cerr << "error: --suite is required (try --list)\n";
        return 2;
    }

    config.suite = suite;
    if (max_weight >= 0) config.max_weight = max_weight;
    if (charge_window >= 0) config.charge_window = charge_window;
    if (!frame_file.empty()) config.frame_file = frame_file;
    for (auto& p : params) {
        auto eq = p.find('=');
        if (eq == std::string::npos) {
            std::cerr << "error: --param expects key=value, got '" << p << "'\n";
            return 2;
        }
        config.params[p.substr(0, eq)] = p.substr(eq + 1);
    }

    try {
        auto records = nwvoa::suites::run_suite(config);
        bool pass = true;
        for (auto& r : records) pass = pass && r.pass;
        std::string payload = nwvoa::report::render(suite, std::move(records));
        if (!out_file.empty()) {
            nwvoa::report::write_file(out_file, payload);
        } else {
            std::cout << payload;
        }
        std::cerr << "suite " << suite << ": " << (pass ? "PASS" : "FAIL") << "\n";
        return pass ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 2;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
