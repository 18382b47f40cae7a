#include "magsteklov/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace magsteklov::cli;
    RunConfig config;

    CLI::App app{"Magnetic Steklov and boundary magnetic Laplacian spectra of the 2-ball and 4-ball"};
    app.set_config("--config", "", "Key-value config file; command-line flags take precedence");
    app.require_subcommand(1);
    // Subcommands pass their options up to the shared option set below.
    app.fallthrough();

    app.add_option("--model", config.model, "disk2, ball4, circle or sphere3")->capture_default_str();
    app.add_option("--t", config.t, "Field strength: a value or start:step:stop")->capture_default_str();
    app.add_option("--k-max", config.k_max, "Largest mode degree in spectrum tables")->capture_default_str();
    app.add_option("--format", config.format, "csv, json or svg (default csv for spectrum, json otherwise)");
    app.add_option("-o,--output", config.output, "Output file (default standard output)");
    app.add_option("--multiplicity", config.multiplicity, "4-ball multiplicities: per-weight-space or simple")
        ->capture_default_str();
    app.add_option("--g", config.g, "Angular profile g(r) as a sum of terms c*r^n")->capture_default_str();
    app.add_option("--r0", config.r0, "Outer radius for frustration")->capture_default_str();
    app.add_option("--r-inner", config.r_inner, "Inner radius for frustration")->capture_default_str();
    app.add_flag("--punctured", config.punctured, "Remove the origin");
    app.add_option("--s-grid", config.s_grid, "Radii of the Cheeger test domains, start:step:stop")
        ->capture_default_str();
    app.add_option("--check", config.check,
                   "all, upper, reilly, max-principle, l2, asymptotic, monotonicity, gauge or comparison")
        ->capture_default_str();
    app.add_option("--k", config.k, "Mode degree for max-principle and l2")->capture_default_str();
    app.add_option("--sign", config.sign, "Mode sign for max-principle and l2: plus or minus")->capture_default_str();
    app.add_option("--n", config.n, "Number of paired eigenvalues for comparison")->capture_default_str();
    app.add_option("--candidate-c", config.candidate_constant, "Candidate uniform gap constant for comparison")
        ->capture_default_str();
    app.add_option("--safety", config.safety, "Safety factor of the asymptotic tolerance")->capture_default_str();
    app.add_option("--grid-points", config.grid_points, "Radial grid size for max-principle")->capture_default_str();
    app.add_flag("--quick", config.quick, "verify: smaller oracle and radial-check grids");

    for (const char* name : {"spectrum", "frustration", "cheeger", "bounds", "verify"})
        app.add_subcommand(name, std::string("Run the ") + name + " command")->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Success : UsageError;
    }
    config.command = app.get_subcommands().front()->get_name();

    const auto result = run(config);
    std::cerr << result.summary;
    if (result.exit_code == Success || result.exit_code == CheckFailure) {
        if (!write_output(config.output, result.content)) {
            std::cerr << "error: cannot write output to " << config.output << '\n';
            return NumericFailure;
        }
    }
    return result.exit_code;
}
