#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace iwa::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;
};

struct SuiteResult {
    std::vector<CriterionResult> results;
    bool all_pass = true;
};

/// Run the full acceptance suite. Criteria 1-9 run twice; criterion 10
/// compares the two transcripts byte for byte. Progress lines go to `out`
/// (one PASS/FAIL line per criterion).
SuiteResult run_suite(std::ostream& out);

}  // namespace iwa::acceptance
