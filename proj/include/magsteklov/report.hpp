#pragma once

#include <string>
#include <utility>
#include <vector>

namespace magsteklov {

enum class HypothesisStatus { Satisfied, Violated, NotChecked };

/// What a report is allowed to conclude.
enum class ReportKind {
    /// A proved inequality; with all hypotheses satisfied it must hold.
    Theorem,
    /// Compares against estimates of the true quantities; never a refutation.
    Diagnostic,
    /// Reports observed numbers only.
    ReportOnly,
};

enum class ReportStatus {
    Satisfied,
    Violated,
    NotApplicable,
    ConsistentUpperEstimate,
    InconclusiveUpperEstimate,
    GapUnbounded,
    GapBoundedOnGrid,
};

std::string to_string(HypothesisStatus status);
std::string to_string(ReportKind kind);
std::string to_string(ReportStatus status);

struct Hypothesis {
    std::string description;
    HypothesisStatus status = HypothesisStatus::NotChecked;
};

struct BoundReport {
    std::string name;
    ReportKind kind = ReportKind::Theorem;
    std::vector<Hypothesis> hypotheses;
    double lhs = 0.0;
    double rhs = 0.0;
    double tolerance = 0.0;
    bool satisfied = false;
    /// All hypotheses Satisfied; `satisfied` only carries weight when true.
    bool applicable = true;
    ReportStatus status = ReportStatus::NotApplicable;
    /// Extra named quantities (ratios, fitted exponents, intermediate values).
    std::vector<std::pair<std::string, double>> details;

    double detail(const std::string& key) const;
    /// Recomputes `applicable` from the hypotheses.
    void refresh_applicable();
};

} // namespace magsteklov
