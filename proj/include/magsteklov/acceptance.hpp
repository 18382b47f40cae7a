#pragma once

// The acceptance suite behind `magsteklov verify`: one CheckResult per
// criterion, each carrying the compared quantities and the pinned tolerance.

#include <string>
#include <vector>

namespace magsteklov {

struct CheckResult {
    std::string name;
    bool passed = false;
    double lhs = 0.0;
    double rhs = 0.0;
    double tolerance = 0.0;
    std::string detail;
    /// Wall-clock time of the check. Kept out of serialized reports so they
    /// stay byte-identical between runs.
    double seconds = 0.0;
};

struct AcceptanceOptions {
    /// Restricts the grid sweeps to t <= 10 and k <= 8. Checks pinned to a
    /// single large field strength still run, since they cost well under a second.
    bool quick = false;
    /// Adds the determinism check, which reruns the whole suite once.
    bool include_determinism = true;
};

std::vector<CheckResult> run_acceptance(const AcceptanceOptions& options = {});

bool all_passed(const std::vector<CheckResult>& checks);

} // namespace magsteklov
