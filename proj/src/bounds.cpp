#include "magsteklov/bounds.hpp"

#include "magsteklov/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace magsteklov {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double inf = std::numeric_limits<double>::infinity();

template <class F>
double integrate(F f, double lo, double hi, const char* what) {
    using Rule = boost::math::quadrature::gauss_kronrod<double, 61>;
    double err = 0.0;
    const double value = Rule::integrate(f, lo, hi, 15, 1e-14, &err);
    if (!std::isfinite(value) || err > 1e-10 * std::max(1.0, std::abs(value)))
        throw SpectralError(ErrorKind::QuadratureFailure,
                            std::string(what) + ": error estimate " + std::to_string(err));
    return value;
}

HypothesisStatus status_of(bool holds) { return holds ? HypothesisStatus::Satisfied : HypothesisStatus::Violated; }

void finish_theorem(BoundReport& report) {
    report.refresh_applicable();
    if (!report.applicable)
        report.status = ReportStatus::NotApplicable;
    else
        report.status = report.satisfied ? ReportStatus::Satisfied : ReportStatus::Violated;
}

std::string mode_name(int k, ModeSign sign) { return "k=" + std::to_string(k) + " " + to_string(sign); }

} // namespace

void ThetaProfile::validate() const {
    if (m < 2)
        throw SpectralError(ErrorKind::InvalidParams, "Theta needs dimension m >= 2");
    if (!(R > 0.0) || !std::isfinite(R) || !std::isfinite(K) || !std::isfinite(H0))
        throw SpectralError(ErrorKind::InvalidParams, "Theta needs finite K, H0 and R > 0");
}

double ThetaProfile::s(double r) const {
    if (K > 0.0) {
        const double q = std::sqrt(K);
        return std::sin(q * r) / q;
    }
    if (K < 0.0) {
        const double q = std::sqrt(-K);
        return std::sinh(q * r) / q;
    }
    return r;
}

double ThetaProfile::s_prime(double r) const {
    if (K > 0.0)
        return std::cos(std::sqrt(K) * r);
    if (K < 0.0)
        return std::cosh(std::sqrt(-K) * r);
    return 1.0;
}

double ThetaProfile::base(double r) const { return s_prime(r) - H0 * s(r); }

double ThetaProfile::value(double r) const { return std::pow(base(r), m - 1); }

double ThetaProfile::integral() const {
    validate();
    return integrate([this](double r) { return value(r); }, 0.0, R, "Theta integral");
}

double ThetaProfile::min_base_before_R(int samples) const {
    double lowest = base(0.0);
    for (int i = 1; i < samples; ++i)
        lowest = std::min(lowest, base(R * i / samples));
    return lowest;
}

std::vector<double> uniform_grid(int n) {
    if (n < 2)
        throw SpectralError(ErrorKind::InvalidParams, "grid needs at least two points");
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i)
        grid[i] = static_cast<double>(i) / (n - 1);
    grid.back() = 1.0;
    return grid;
}

BoundReport max_principle_check(int k, ModeSign sign, double t, const std::vector<double>& r_grid) {
    if (r_grid.empty() || std::find(r_grid.begin(), r_grid.end(), 1.0) == r_grid.end())
        throw SpectralError(ErrorKind::InvalidParams, "radial grid must contain r = 1");
    for (double r : r_grid)
        if (!(r >= 0.0 && r <= 1.0))
            throw SpectralError(ErrorKind::InvalidParams, "radial grid must lie in [0, 1]");

    const auto profile = series_solve(RadialOdeParams::disk(k, sign, t));
    BoundReport report;
    report.name = "max-principle";
    report.hypotheses = {{"eta-harmonic extension of a unit-modulus boundary mode", HypothesisStatus::Satisfied}};
    double peak = 0.0, arg = 0.0;
    for (double r : r_grid) {
        const double v = std::abs(evaluate_profile(profile, r));
        if (v > peak) {
            peak = v;
            arg = r;
        }
    }
    report.lhs = peak;
    report.rhs = 1.0;
    report.tolerance = 1e-10;
    report.satisfied = report.lhs <= report.rhs + report.tolerance;
    report.details = {{"t", t}, {"k", static_cast<double>(k)}, {"argmax_r", arg}};
    finish_theorem(report);
    report.name += " " + mode_name(k, sign);
    return report;
}

BoundReport subharmonic_l2_check(int k, ModeSign sign, double t) {
    const auto profile = series_solve(RadialOdeParams::disk(k, sign, t));
    const auto integrand = [&profile](double r) {
        const double f = evaluate_profile(profile, r);
        return f * f * r;
    };
    const ThetaProfile theta{0.0, 1.0, 2, 1.0};

    BoundReport report;
    report.name = "subharmonic-l2 " + mode_name(k, sign);
    report.hypotheses = {
        {"unit disk: K = 0, H0 = 1, m = 2, R = 1", HypothesisStatus::Satisfied},
        {"|f|^2 nonnegative and subharmonic for an eta-harmonic f", HypothesisStatus::Satisfied},
    };
    report.lhs = 2.0 * pi * integrate(integrand, 0.0, 1.0, "interior L2 norm");
    report.rhs = theta.integral() * 2.0 * pi;
    report.tolerance = 1e-9;
    report.satisfied = report.lhs <= report.rhs + report.tolerance;
    report.details = {{"t", t}, {"k", static_cast<double>(k)}, {"theta_integral", theta.integral()}};
    finish_theorem(report);
    return report;
}

double bessel_j0(double x) {
    const double q = -0.25 * x * x;
    double term = 1.0, sum = 1.0, largest = 1.0;
    for (int j = 1; j < 500; ++j) {
        term *= q / (static_cast<double>(j) * j);
        sum += term;
        largest = std::max(largest, std::abs(term));
        if (std::abs(term) < 1e-18 * largest && j > 2)
            break;
    }
    return sum;
}

double bessel_j0_first_zero() {
    double lo = 2.0, hi = 3.0;
    while (hi - lo > 1e-15) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi)
            break;
        (bessel_j0(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

BoundReport upper_bound_disk(double t) {
    const double j01 = bessel_j0_first_zero();
    const double lambda = j01 * j01;

    BoundReport report;
    report.name = "upper-bound-disk";
    report.hypotheses = {
        {"potential t(-y dx + x dy) is coclosed and tangential on the unit circle", HypothesisStatus::Satisfied},
        {"disk has trivial first cohomology, so the lattice distance term vanishes", HypothesisStatus::Satisfied},
    };
    report.lhs = disk_first_eigenvalue(t);
    report.rhs = 2.0 * t * t / lambda;
    report.tolerance = 1e-9;
    report.satisfied = report.lhs <= report.rhs + report.tolerance;
    report.details = {{"t", t},
                      {"j01", j01},
                      {"dirichlet_lambda1", lambda},
                      {"ratio", report.rhs > 0.0 ? report.lhs / report.rhs : 0.0}};
    finish_theorem(report);
    return report;
}

BoundReport reilly_lower_bound(int m, double alpha, double d_eta_sup, double lambda1_boundary,
                               const ThetaProfile& theta, const ReillyHypotheses& hypotheses,
                               std::optional<double> sigma1) {
    theta.validate();
    if (m < 2 || !std::isfinite(alpha) || !(d_eta_sup >= 0.0) || !(lambda1_boundary >= 0.0))
        throw SpectralError(ErrorKind::InvalidParams,
                            "lower bound needs m >= 2, finite alpha, d_eta_sup >= 0 and lambda1 >= 0");

    const bool theta_positive = theta.min_base_before_R() > 0.0;
    const bool claimed = hypotheses.ricci_bound == HypothesisStatus::Satisfied &&
                         hypotheses.second_fundamental_form == HypothesisStatus::Satisfied &&
                         hypotheses.boundary_not_gauge_trivial == HypothesisStatus::Satisfied;
    if (claimed && !theta_positive)
        throw SpectralError(ErrorKind::ThetaNonpositive,
                            "Theta is not positive on [0, R) although every hypothesis was declared satisfied");

    const double theta_integral = theta.integral();
    double correction = 0.0;
    if (d_eta_sup > 0.0)
        correction = lambda1_boundary > 0.0 ? d_eta_sup * d_eta_sup * theta_integral / (2.0 * lambda1_boundary) : inf;

    BoundReport report;
    report.name = "reilly-lower-bound";
    report.hypotheses = {
        {"Ric >= sup |d eta|", hypotheses.ricci_bound},
        {"second fundamental form >= alpha > 0", hypotheses.second_fundamental_form},
        {"boundary restriction of eta not gauge trivial", hypotheses.boundary_not_gauge_trivial},
        {"Theta positive on [0, R)", status_of(theta_positive)},
    };
    report.rhs = 0.5 * alpha - correction;
    report.lhs = sigma1.value_or(std::numeric_limits<double>::quiet_NaN());
    report.tolerance = 1e-9;
    report.satisfied = sigma1.has_value() && report.lhs >= report.rhs - report.tolerance;
    report.details = {{"m", static_cast<double>(m)},
                      {"alpha", alpha},
                      {"d_eta_sup", d_eta_sup},
                      {"lambda1_boundary", lambda1_boundary},
                      {"theta_K", theta.K},
                      {"theta_integral", theta_integral}};
    finish_theorem(report);
    return report;
}

BoundReport reilly_flat_disk(double t) {
    const double d = 2.0 * std::abs(t);
    const double dist = std::abs(t - std::round(t));
    const ThetaProfile theta{d, 1.0, 2, 1.0};
    ReillyHypotheses h;
    h.ricci_bound = status_of(d == 0.0);
    h.second_fundamental_form = HypothesisStatus::Satisfied;
    h.boundary_not_gauge_trivial = status_of(dist > 0.0);
    auto report = reilly_lower_bound(2, 1.0, d, dist * dist, theta, h, disk_first_eigenvalue(t));
    report.name = "reilly-flat-disk";
    report.details.insert(report.details.begin(), {"t", t});
    return report;
}

double asymptotic_prediction(double t) {
    const double a = kAsymptoticAlpha;
    return a * std::sqrt(t) - (a * a + 2.0) / 6.0;
}

BoundReport asymptotic_check(const std::vector<double>& t_values, double safety) {
    if (t_values.size() < 2)
        throw SpectralError(ErrorKind::InvalidParams, "asymptotic check needs at least two field strengths");
    for (double t : t_values)
        if (!(t > 0.0))
            throw SpectralError(ErrorKind::InvalidParams, "asymptotic check needs positive field strengths");

    BoundReport report;
    report.name = "asymptotic";
    const double t_min = *std::min_element(t_values.begin(), t_values.end());
    report.hypotheses = {{"every t >= 50", status_of(t_min >= 50.0)}};

    double worst = 0.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (double t : t_values) {
        const double sigma = disk_first_eigenvalue(t);
        worst = std::max(worst, std::abs(sigma - asymptotic_prediction(t)));
        report.details.emplace_back("sigma1@" + std::to_string(t), sigma);
        const double x = std::log(t), y = std::log(sigma);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(t_values.size());
    const double exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);

    report.lhs = worst;
    report.rhs = safety / std::sqrt(t_min);
    report.satisfied = worst <= report.rhs && exponent >= 0.45 && exponent <= 0.55;
    report.details.emplace_back("fitted_exponent", exponent);
    report.details.emplace_back("safety_factor", safety);
    finish_theorem(report);
    return report;
}

BoundReport monotonicity_check(const std::vector<double>& t_values) {
    if (t_values.size() < 2)
        throw SpectralError(ErrorKind::InvalidParams, "monotonicity check needs at least two field strengths");
    auto ts = t_values;
    std::sort(ts.begin(), ts.end());

    BoundReport report;
    report.name = "monotonicity";
    report.hypotheses = {{"field strengths positive", status_of(ts.front() > 0.0)}};
    // lhs: smallest increment between consecutive grid points.
    double smallest = inf, prev = disk_first_eigenvalue(ts.front());
    report.details.emplace_back("sigma1@" + std::to_string(ts.front()), prev);
    for (std::size_t i = 1; i < ts.size(); ++i) {
        const double cur = disk_first_eigenvalue(ts[i]);
        report.details.emplace_back("sigma1@" + std::to_string(ts[i]), cur);
        smallest = std::min(smallest, cur - prev);
        prev = cur;
    }
    report.lhs = smallest;
    report.rhs = 0.0;
    report.satisfied = smallest > 0.0;
    finish_theorem(report);
    return report;
}

BoundReport gauge_periodicity_check(double t, int k_max) {
    if (!std::isfinite(t) || k_max < 0)
        throw SpectralError(ErrorKind::InvalidParams, "gauge check needs finite t and k_max >= 0");
    const double edge = k_max - 2 + std::min(t, 1.0);
    // Modes above k_max contribute nothing below (k_max + 1 - |s|)^2 at s = t, t + 1.
    const double reach = k_max + 1 - std::max(std::abs(t), std::abs(t + 1.0));
    if (!(edge > 0.0) || !(reach > 0.0) || edge * edge > reach * reach)
        throw SpectralError(ErrorKind::TruncationInsufficient,
                            "k_max " + std::to_string(k_max) + " too small for a reliable window at t = " +
                                std::to_string(t));
    // Pulled in slightly so one rounding of an edge value cannot split the two lists.
    const double window = edge * edge * (1.0 - 1e-9);

    const auto below = [window](const SpectrumTable& table) {
        std::vector<double> out;
        for (double v : table.expanded_values())
            if (v < window)
                out.push_back(v);
        return out;
    };
    const auto a = below(circle_laplacian_spectrum(t, k_max));
    const auto b = below(circle_laplacian_spectrum(t + 1.0, k_max));

    BoundReport report;
    report.name = "gauge-periodicity";
    report.hypotheses = {{"shift by d theta has integer period on the circle", HypothesisStatus::Satisfied}};
    double worst = 0.0;
    if (a.size() != b.size()) {
        worst = inf;
    } else {
        for (std::size_t i = 0; i < a.size(); ++i)
            worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    report.lhs = worst;
    report.rhs = 0.0;
    report.tolerance = 1e-12;
    report.satisfied = worst <= report.tolerance;
    report.details = {{"t", t},
                      {"window", edge * edge},
                      {"count_t", static_cast<double>(a.size())},
                      {"count_t_plus_1", static_cast<double>(b.size())}};
    finish_theorem(report);
    return report;
}

ComparisonTable comparison_report(Model model, const std::vector<double>& t_grid, int n, double candidate_constant) {
    if (model != Model::Disk2 && model != Model::Ball4)
        throw SpectralError(ErrorKind::InvalidParams, "comparison is defined for disk2 and ball4");
    if (n < 1 || t_grid.empty())
        throw SpectralError(ErrorKind::InvalidParams, "comparison needs n >= 1 and a nonempty grid");
    const Model boundary_model = model == Model::Disk2 ? Model::Circle : Model::Sphere3;

    ComparisonTable table;
    table.model = model;
    table.candidate_constant = candidate_constant;
    for (double t : t_grid) {
        const auto rows = paired_gap_table(reliable_spectrum(model, t, n), reliable_spectrum(boundary_model, t, n), n);
        double max_abs = 0.0;
        for (const auto& row : rows)
            max_abs = std::max(max_abs, std::abs(row.gap));

        BoundReport report;
        report.name = "comparison-" + to_string(model);
        report.kind = ReportKind::ReportOnly;
        report.hypotheses = {{"candidate constant matches the comparison constants", HypothesisStatus::NotChecked}};
        report.refresh_applicable();
        report.lhs = model == Model::Disk2 ? rows.front().gap : max_abs;
        report.rhs = candidate_constant;
        report.satisfied = report.lhs <= candidate_constant;
        report.status = report.satisfied ? ReportStatus::GapBoundedOnGrid : ReportStatus::GapUnbounded;
        report.details = {{"t", t},
                          {"sigma1", rows.front().sigma},
                          {"sqrt_lambda1", rows.front().sqrt_lambda},
                          {"lowest_gap", rows.front().gap},
                          {"max_abs_gap", max_abs}};
        table.max_gap = std::max(table.max_gap, report.lhs);
        table.rows.push_back(std::move(report));
    }
    table.status = model == Model::Disk2 && table.max_gap > candidate_constant ? ReportStatus::GapUnbounded
                                                                                : ReportStatus::GapBoundedOnGrid;
    return table;
}

} // namespace magsteklov
