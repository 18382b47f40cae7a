#include "magsteklov/report.hpp"

#include "magsteklov/errors.hpp"

#include <algorithm>

namespace magsteklov {

std::string to_string(HypothesisStatus status) {
    switch (status) {
    case HypothesisStatus::Satisfied: return "Satisfied";
    case HypothesisStatus::Violated: return "Violated";
    case HypothesisStatus::NotChecked: return "NotChecked";
    }
    return "Unknown";
}

std::string to_string(ReportKind kind) {
    switch (kind) {
    case ReportKind::Theorem: return "Theorem";
    case ReportKind::Diagnostic: return "Diagnostic";
    case ReportKind::ReportOnly: return "ReportOnly";
    }
    return "Unknown";
}

std::string to_string(ReportStatus status) {
    switch (status) {
    case ReportStatus::Satisfied: return "Satisfied";
    case ReportStatus::Violated: return "Violated";
    case ReportStatus::NotApplicable: return "NotApplicable";
    case ReportStatus::ConsistentUpperEstimate: return "ConsistentUpperEstimate";
    case ReportStatus::InconclusiveUpperEstimate: return "InconclusiveUpperEstimate";
    case ReportStatus::GapUnbounded: return "GapUnbounded";
    case ReportStatus::GapBoundedOnGrid: return "GapBoundedOnGrid";
    }
    return "Unknown";
}

double BoundReport::detail(const std::string& key) const {
    const auto it = std::find_if(details.begin(), details.end(), [&key](const auto& kv) { return kv.first == key; });
    if (it == details.end())
        throw SpectralError(ErrorKind::InvalidParams, "report '" + name + "' has no detail '" + key + "'");
    return it->second;
}

void BoundReport::refresh_applicable() {
    applicable = std::all_of(hypotheses.begin(), hypotheses.end(),
                             [](const Hypothesis& h) { return h.status == HypothesisStatus::Satisfied; });
}

} // namespace magsteklov
