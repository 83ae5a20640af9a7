#pragma once

#include <string>
#include <vector>

namespace pptor::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

/// Suite names in criterion order (criterion i is suite_names()[i - 1]).
const std::vector<std::string>& suite_names();

CriterionResult run_criterion(int id);

/// "all", a suite name, or a criterion number. std::invalid_argument otherwise.
std::vector<CriterionResult> run_suite(const std::string& name);

/// "PASS [3] radical-laws: ..." without timing, so output is reproducible.
std::string format_result(const CriterionResult& r);

}  // namespace pptor::verify
