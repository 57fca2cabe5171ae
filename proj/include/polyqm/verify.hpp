// Verification suites: each check compares a measured error against a stated
// bound, with everything needed to print a report line.  The CLI `verify`
// command and the acceptance runner both drive these.

#pragma once

#include <string>
#include <vector>

namespace polyqm {

struct VerifyCheck {
    std::string suite;
    std::string name;
    double measured = 0.0;
    double bound = 0.0;
    double lower = 0.0;  // nonzero only for ratio-style window checks
    bool pass = false;
};

struct VerifyOptions {
    int grid_points = 1024;       // mesh for the periodic cross-checks
    int well_grid_points = 2000;  // mesh for the Dirichlet well
    unsigned probe_seed = 987654321;
};

std::vector<std::string> suite_names();

// suite may be any entry of suite_names() or "all".
std::vector<VerifyCheck> run_suite(const std::string& suite,
                                   const VerifyOptions& options = {});

bool all_passed(const std::vector<VerifyCheck>& checks);

}  // namespace polyqm
