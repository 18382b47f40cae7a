#include "magsteklov/errors.hpp"

namespace magsteklov {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::DegenerateNormalization: return "DegenerateNormalization";
    case ErrorKind::RiccatiPole: return "RiccatiPole";
    case ErrorKind::StepLimitExceeded: return "StepLimitExceeded";
    case ErrorKind::SingularSolution: return "SingularSolution";
    case ErrorKind::CancellationLoss: return "CancellationLoss";
    case ErrorKind::NegativeEigenvalue: return "NegativeEigenvalue";
    case ErrorKind::TruncationInsufficient: return "TruncationInsufficient";
    case ErrorKind::IllDefinedAtOrigin: return "IllDefinedAtOrigin";
    case ErrorKind::ThetaNonpositive: return "ThetaNonpositive";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::Config: return "Config";
    }
    return "Unknown";
}

} // namespace magsteklov
