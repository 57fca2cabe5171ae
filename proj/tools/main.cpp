#include "polyqm/app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{
        "Quantum particle constrained to a regular polygon: closed-form spectra, "
        "wavefunction samples, independent numerical cross-checks, limit cases, "
        "and the classical bounce model."};
    app.require_subcommand(1);

    polyqm::RunConfig cfg;
    std::string extension;

    const std::map<std::string, polyqm::OutputFormat> format_map{
        {"csv", polyqm::OutputFormat::Csv}, {"json", polyqm::OutputFormat::Json}};

    auto add_output_flags = [&](CLI::App* cmd) {
        cmd->add_option("-o,--output", cfg.output_path,
                        "Write to this file instead of stdout");
        cmd->add_option("--format", cfg.format, "Output format (csv or json)")
            ->transform(CLI::CheckedTransformer(format_map, CLI::ignore_case));
        cmd->add_option("--precision", cfg.precision,
                        "Significant digits in CSV numbers")
            ->check(CLI::Range(1, 17));
        cmd->add_option("--run-id", cfg.run_id,
                        "Optional identifier copied into the metadata");
    };
    auto add_polygon_flags = [&](CLI::App* cmd) {
        cmd->add_option("--n-sides", cfg.n_sides, "Number of polygon sides N");
        cmd->add_option("--radius", cfg.radius, "Circumscribed-circle radius a");
        cmd->add_option("--hbar", cfg.hbar, "Value of hbar (mass is fixed at 1)");
    };

    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "Energy levels n, k, E from the quantization condition");
    add_polygon_flags(spectrum);
    spectrum->add_option("--levels", cfg.levels, "Number of levels to emit");
    spectrum->add_option("--n-min", cfg.n_min, "First quantum number (default 1)");
    spectrum
        ->add_option("--extension", extension,
                     "Also emit the whole-perimeter ring levels j = n N")
        ->check(CLI::IsMember({"perimeter"}));
    add_output_flags(spectrum);

    CLI::App* wavefunction = app.add_subcommand(
        "wavefunction", "Sample one eigenfunction side by side along the polygon");
    add_polygon_flags(wavefunction);
    wavefunction->add_option("--n", cfg.n, "Quantum number of the level");
    wavefunction->add_option("--form", cfg.form,
                             "symmetric, antisymmetric, plane_plus, or plane_minus");
    wavefunction->add_option("--convention", cfg.convention,
                             "Normalization measure: xi_measure or arc_measure");
    wavefunction->add_option("--samples", cfg.samples_per_side,
                             "Samples per side (corners included)");
    add_output_flags(wavefunction);

    CLI::App* verify = app.add_subcommand(
        "verify", "Run the numerical cross-check suites and report errors vs bounds");
    verify->add_option("--suite", cfg.suite,
                       "Suite name or 'all' (see README for the list)");
    verify->add_option("--grid", cfg.grid_points,
                       "Mesh size M for the periodic cross-checks");
    verify->add_option("--well-grid", cfg.well_grid_points,
                       "Mesh size for the Dirichlet well");
    verify->add_option("--seed", cfg.probe_seed, "Seed for the randomized probes");
    add_output_flags(verify);

    CLI::App* limits = app.add_subcommand(
        "limits", "Circle-limit convergence table and the N=2 well comparison");
    limits->add_option("--table", cfg.table, "circle, well, or both");
    limits->add_option("--radius", cfg.radius, "Circumscribed-circle radius a");
    limits->add_option("--hbar", cfg.hbar, "Value of hbar");
    limits->add_option("--levels", cfg.levels, "Number of quantum numbers");
    limits->add_option("--n-min", cfg.n_min, "First quantum number");
    limits->add_option("--grid", cfg.well_grid_points,
                       "Mesh size for the well comparison");
    add_output_flags(limits);

    CLI::App* classical = app.add_subcommand(
        "classical", "Corner-bounce trajectory and the average-force identity");
    classical->add_option("--n-sides", cfg.n_sides, "Number of polygon sides N");
    classical->add_option("--radius", cfg.radius, "Circumscribed-circle radius a");
    classical->add_option("--speed", cfg.speed, "Particle speed v");
    classical->add_option("--bounces", cfg.bounces,
                          "Number of corner bounces (default: one full cycle)");
    add_output_flags(classical);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        nlohmann::ordered_json error;
        error["error"] = {{"type", "validation"}, {"message", e.what()}};
        std::cerr << error.dump() << "\n";
        return 1;
    }

    if (spectrum->parsed()) {
        cfg.command = polyqm::Command::Spectrum;
        cfg.perimeter_extension = extension == "perimeter";
    } else if (wavefunction->parsed()) {
        cfg.command = polyqm::Command::Wavefunction;
    } else if (verify->parsed()) {
        cfg.command = polyqm::Command::Verify;
    } else if (limits->parsed()) {
        cfg.command = polyqm::Command::Limits;
    } else {
        cfg.command = polyqm::Command::Classical;
    }
    return polyqm::run(cfg, std::cout, std::cerr);
}
