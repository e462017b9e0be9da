#ifndef WILDRAM_REPORT_HPP
#define WILDRAM_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace wildram {

enum class CheckVerdict { Pass, Fail, Indeterminate };

std::string verdict_name(CheckVerdict v);

struct CheckRecord {
    std::string id;       // stable machine id, e.g. "invariants/minor-relations"
    std::string anchor;   // stable tag naming what the check verifies
    CheckVerdict verdict;
    std::string witness;  // residual / counterexample / value summary
    double ms = 0.0;
};

struct Report {
    std::string case_name;
    std::vector<CheckRecord> checks;

    std::size_t count(CheckVerdict v) const;
    // 0 all pass, 1 any fail, 2 any indeterminate without fails
    int exit_code() const;
};

}  // namespace wildram

#endif
