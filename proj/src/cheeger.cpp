#include "magsteklov/cheeger.hpp"

#include "magsteklov/errors.hpp"
#include "magsteklov/frustration.hpp"
#include "magsteklov/spectra_models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace magsteklov {

namespace {
constexpr double pi = std::numbers::pi;
}

TestDomain TestDomain::centered_disk(double s) {
    if (!(s > 0.0 && s <= 1.0))
        throw SpectralError(ErrorKind::InvalidParams, "centred disk radius must lie in (0, 1]");
    return {Kind::CenteredDisk, s};
}

TestDomain TestDomain::annulus(double s) {
    if (!(s >= 0.0 && s < 1.0))
        throw SpectralError(ErrorKind::InvalidParams, "annulus inner radius must lie in [0, 1)");
    return {Kind::Annulus, s};
}

double TestDomain::area() const { return kind == Kind::CenteredDisk ? pi * s * s : pi * (1.0 - s * s); }

double TestDomain::interior_boundary() const {
    if (kind == Kind::CenteredDisk)
        return s < 1.0 ? 2.0 * pi * s : 0.0;
    return 2.0 * pi * s;
}

double TestDomain::exterior_boundary() const {
    if (kind == Kind::CenteredDisk)
        return s < 1.0 ? 0.0 : 2.0 * pi;
    return 2.0 * pi;
}

CheegerQuotients cheeger_quotients(double t, const TestDomain& domain) {
    if (!(t >= 0.0))
        throw SpectralError(ErrorKind::InvalidParams, "field strength must be nonnegative");

    const bool annulus = domain.kind == TestDomain::Kind::Annulus;
    const auto spec = annulus ? FrustrationSpec::power(t, 2, domain.s, 1.0, true)
                              : FrustrationSpec::power(t, 2, 0.0, domain.s, false);
    CheegerQuotients q;
    q.frustration = frustration(spec).value;
    const double numerator = q.frustration + domain.interior_boundary();
    q.h = numerator / domain.area();
    const double ext = domain.exterior_boundary();
    q.h_prime = ext > 0.0 ? numerator / ext : std::numeric_limits<double>::infinity();
    return q;
}

BoundReport jammes_diagnostic(double t, const std::vector<double>& s_grid) {
    if (s_grid.empty())
        throw SpectralError(ErrorKind::InvalidParams, "s_grid is empty");

    double h_min = std::numeric_limits<double>::infinity();
    double hp_min = std::numeric_limits<double>::infinity();
    double h_arg = 0.0, hp_arg = 0.0;
    for (const double s : s_grid) {
        std::vector<TestDomain> family{TestDomain::annulus(s)};
        if (s > 0.0)
            family.push_back(TestDomain::centered_disk(s));
        for (const auto& domain : family) {
            const auto q = cheeger_quotients(t, domain);
            if (q.h < h_min) {
                h_min = q.h;
                h_arg = s;
            }
            if (std::isfinite(q.h_prime) && q.h_prime < hp_min) {
                hp_min = q.h_prime;
                hp_arg = s;
            }
        }
    }

    BoundReport report;
    report.name = "cheeger-jammes";
    report.kind = ReportKind::Diagnostic;
    report.hypotheses = {
        {"family minima equal the true infima h and h'", HypothesisStatus::NotChecked},
    };
    report.refresh_applicable();
    report.lhs = disk_first_eigenvalue(t);
    report.rhs = h_min * hp_min / 8.0;
    report.tolerance = 1e-12;
    report.satisfied = report.lhs >= report.rhs - report.tolerance;
    report.status =
        report.satisfied ? ReportStatus::ConsistentUpperEstimate : ReportStatus::InconclusiveUpperEstimate;
    report.details = {{"t", t},
                      {"h_upper_estimate", h_min},
                      {"h_upper_estimate_s", h_arg},
                      {"h_prime_upper_estimate", hp_min},
                      {"h_prime_upper_estimate_s", hp_arg},
                      {"sigma1", report.lhs}};
    return report;
}

} // namespace magsteklov
