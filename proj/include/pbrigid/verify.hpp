#pragma once

#include <string>
#include <vector>

namespace pbrigid {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// The battery of exact checks behind `verify-paper`: every published number
// the library reproduces (enumeration, weights, amplitudes, K^2, singular
// point lists, resolution graphs, contraction replays, discrepancies,
// witness certificates). All equalities are exact.
std::vector<CheckResult> run_paper_checks();

} // namespace pbrigid
