#pragma once

// Numerical checks of the inequalities and identities satisfied by the disk
// and 4-ball spectra. Each check returns a BoundReport; hypotheses that are
// not met make the report inapplicable rather than failed.

#include "magsteklov/radial_engine.hpp"
#include "magsteklov/report.hpp"
#include "magsteklov/spectra_models.hpp"

#include <optional>
#include <vector>

namespace magsteklov {

/// Comparison density Theta(r) = (s_K'(r) - H0 s_K(r))^(m-1), where s_K is
/// sin(sqrt(K) r)/sqrt(K), r or sinh(sqrt(-K) r)/sqrt(-K) as K is positive,
/// zero or negative.
struct ThetaProfile {
    double K = 0.0;
    double H0 = 1.0;
    int m = 2;
    double R = 1.0;

    double s(double r) const;
    double s_prime(double r) const;
    /// s_K'(r) - H0 s_K(r).
    double base(double r) const;
    double value(double r) const;
    /// Integral of Theta over [0, R].
    double integral() const;
    /// Smallest sampled base value on [0, R); positive iff Theta stays positive
    /// on the sample points.
    double min_base_before_R(int samples = 4096) const;

    void validate() const;
};

BoundReport max_principle_check(int k, ModeSign sign, double t, const std::vector<double>& r_grid);

/// Uniform grid of n points on [0, 1], both ends included.
std::vector<double> uniform_grid(int n);

BoundReport subharmonic_l2_check(int k, ModeSign sign, double t);

/// J0 by its power series; accurate for |x| up to about 10.
double bessel_j0(double x);
/// First positive zero of J0 by bisection of the series on [2, 3].
double bessel_j0_first_zero();

BoundReport upper_bound_disk(double t);

struct ReillyHypotheses {
    HypothesisStatus ricci_bound = HypothesisStatus::NotChecked;
    HypothesisStatus second_fundamental_form = HypothesisStatus::NotChecked;
    HypothesisStatus boundary_not_gauge_trivial = HypothesisStatus::NotChecked;
};

/// rhs = alpha/2 - d_eta_sup^2 * (integral of theta) / (2 lambda1_boundary).
/// lhs is sigma_1 when supplied and NaN otherwise. Throws ThetaNonpositive
/// when every supplied hypothesis is Satisfied yet Theta fails to stay
/// positive on [0, R); otherwise that failure is recorded as a violated
/// hypothesis and the value is still reported.
BoundReport reilly_lower_bound(int m, double alpha, double d_eta_sup, double lambda1_boundary,
                               const ThetaProfile& theta, const ReillyHypotheses& hypotheses,
                               std::optional<double> sigma1 = std::nullopt);

/// The bound specialised to the flat unit disk with potential t(-y dx + x dy),
/// with the hypothesis statuses filled in from the geometry.
BoundReport reilly_flat_disk(double t);

constexpr double kAsymptoticAlpha = 0.7649508693;

/// alpha sqrt(t) - (alpha^2 + 2)/6.
double asymptotic_prediction(double t);

/// Max deviation from the two-term prediction against safety / sqrt(min t),
/// plus the log-log fitted growth exponent, which must lie in [0.45, 0.55].
BoundReport asymptotic_check(const std::vector<double>& t_values, double safety = 3.0);

/// sigma_1 strictly increasing along the sorted t_values.
BoundReport monotonicity_check(const std::vector<double>& t_values);

BoundReport gauge_periodicity_check(double t, int k_max);

struct ComparisonTable {
    Model model = Model::Disk2;
    double candidate_constant = 10.0;
    /// One report per t: lhs is the reported gap, rhs the candidate constant.
    std::vector<BoundReport> rows;
    ReportStatus status = ReportStatus::GapBoundedOnGrid;
    /// Largest lowest-pair gap (Disk2) or largest |gap| (Ball4) over the grid.
    double max_gap = 0.0;
};

ComparisonTable comparison_report(Model model, const std::vector<double>& t_grid, int n,
                                  double candidate_constant = 10.0);

} // namespace magsteklov
