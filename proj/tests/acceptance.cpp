// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Optional argument: a suite name or criterion number.
#include "pptor/verify/acceptance.hpp"

#include <cstdio>
#include <exception>
#include <iostream>

int main(int argc, char** argv) {
    try {
        auto results = pptor::verify::run_suite(argc > 1 ? argv[1] : "all");
        int failed = 0;
        for (const auto& r : results) {
            std::cout << pptor::verify::format_result(r) << "  (" << r.seconds << " s)" << std::endl;
            failed += !r.passed;
        }
        std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed" << std::endl;
        return failed == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
