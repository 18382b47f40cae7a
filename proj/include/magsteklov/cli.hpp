#pragma once

// Command implementations behind the magsteklov executable. Each command
// builds its whole output in memory, so a failure never leaves a partial file.

#include <functional>
#include <string>
#include <vector>

namespace magsteklov::cli {

enum ExitCode : int { Success = 0, CheckFailure = 1, UsageError = 2, NumericFailure = 3 };

struct RunConfig {
    std::string command;
    std::string model = "disk2";
    /// Field strengths: a single value or start:step:stop.
    std::string t = "1";
    int k_max = 5;
    /// csv, json or svg; empty picks csv for spectrum and json otherwise.
    std::string format;
    /// Output path; empty or "-" writes to standard output.
    std::string output;
    std::string multiplicity = "per-weight-space";

    // frustration
    std::string g = "r^2";
    double r0 = 1.0;
    double r_inner = 0.0;
    bool punctured = false;

    // cheeger
    std::string s_grid = "0:0.05:0.95";

    // bounds
    std::string check = "all";
    int k = 0;
    std::string sign = "plus";
    int n = 10;
    double candidate_constant = 10.0;
    double safety = 3.0;
    int grid_points = 1001;

    // verify
    bool quick = false;
};

struct CommandResult {
    int exit_code = Success;
    /// Document for the output file or standard output.
    std::string content;
    /// Human-readable lines for standard error.
    std::string summary;
};

/// "x" or "a:step:b" with step > 0 and b >= a; values are a + i step rounded
/// to 12 significant digits so decimal grids print cleanly.
std::vector<double> parse_range(const std::string& spec);

/// Sum of terms c*r^n, c*r, r^n, r or c (coefficients optional, e.g. "r^2",
/// "0.5*r^3 - 1"). Sets `description` to a normalised form.
std::function<double(double)> parse_power_sum(const std::string& expr, std::string* description = nullptr);

CommandResult cmd_spectrum(const RunConfig& config);
CommandResult cmd_frustration(const RunConfig& config);
CommandResult cmd_cheeger(const RunConfig& config);
CommandResult cmd_bounds(const RunConfig& config);
CommandResult cmd_verify(const RunConfig& config);

/// Dispatches on config.command and maps errors to exit codes: invalid
/// input to UsageError, any other computation error to NumericFailure.
CommandResult run(const RunConfig& config);

/// Writes content to path through a temporary file and a rename; "-" or empty
/// writes to standard output. Returns false on I/O failure.
bool write_output(const std::string& path, const std::string& content);

} // namespace magsteklov::cli
