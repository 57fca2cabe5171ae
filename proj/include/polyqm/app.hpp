// Command dispatch behind the CLI: a RunConfig fully describes one run, and
// run() turns it into deterministic CSV or JSON on the chosen sink.  Exit
// codes: 0 success, 1 validation error (machine-readable JSON on the error
// stream), 2 verification failure.

#pragma once

#include <ostream>
#include <string>

namespace polyqm {

enum class Command { Spectrum, Wavefunction, Verify, Limits, Classical };

enum class OutputFormat { Csv, Json };

struct RunConfig {
    Command command = Command::Spectrum;

    // shared physics parameters
    int n_sides = 6;
    double radius = 1.0;
    double hbar = 1.0;

    // spectrum / limits
    int n_min = 1;
    int levels = 3;
    bool perimeter_extension = false;
    std::string table = "both";  // limits: circle | well | both

    // wavefunction
    int n = 1;
    std::string form = "symmetric";
    std::string convention = "xi_measure";
    int samples_per_side = 100;

    // verify / limits well comparison
    std::string suite = "all";
    int grid_points = 1024;
    int well_grid_points = 2000;
    unsigned probe_seed = 987654321;

    // classical
    double speed = 1.0;
    int bounces = -1;  // -1: one full cycle of N corners

    // output
    std::string output_path;  // empty: write to the out stream
    OutputFormat format = OutputFormat::Csv;
    int precision = 10;
    std::string run_id;  // embedded in metadata only when nonempty
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace polyqm
