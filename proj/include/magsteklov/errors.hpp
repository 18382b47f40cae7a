#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace magsteklov {

enum class ErrorKind {
    InvalidParams,
    NonConvergence,
    DegenerateNormalization,
    RiccatiPole,
    StepLimitExceeded,
    SingularSolution,
    CancellationLoss,
    NegativeEigenvalue,
    TruncationInsufficient,
    IllDefinedAtOrigin,
    ThetaNonpositive,
    QuadratureFailure,
    Config,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for every numerical failure in the toolkit; the kind
/// tells callers which fallback (if any) applies.
class SpectralError : public std::runtime_error {
public:
    SpectralError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace magsteklov
