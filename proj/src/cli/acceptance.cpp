#include "magsteklov/acceptance.hpp"

#include "magsteklov/bounds.hpp"
#include "magsteklov/emit.hpp"
#include "magsteklov/errors.hpp"
#include "magsteklov/frustration.hpp"
#include "magsteklov/ode_oracle.hpp"
#include "magsteklov/radial_engine.hpp"
#include "magsteklov/spectra_models.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

namespace magsteklov {

namespace {

constexpr double pi = std::numbers::pi;

std::string fmt(double x) { return format_double(x); }

// Runs one check, timing it and turning a thrown SpectralError into a failure.
CheckResult timed(const std::string& name, const std::function<CheckResult()>& body) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult out;
    try {
        out = body();
    } catch (const SpectralError& e) {
        out = {};
        out.passed = false;
        out.detail = std::string(to_string(e.kind())) + ": " + e.what();
    }
    out.name = name;
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

void enforce_runtime(CheckResult& c, double limit) {
    if (c.seconds >= limit) {
        c.passed = false;
        c.detail += "; runtime limit " + fmt(limit) + " s exceeded";
    }
}

CheckResult oracle_disk(bool quick) {
    const int k_top = quick ? 8 : 20;
    double worst = 0.0;
    for (int k = 0; k <= k_top; ++k)
        for (auto sign : {ModeSign::plus, ModeSign::minus})
            for (double t : {0.5, 1.0, 5.0, 10.0}) {
                const auto p = RadialOdeParams::disk(k, sign, t);
                worst = std::max(worst, std::abs(steklov_value(series_solve(p)) - oracle_steklov_value(p)));
            }
    return {"", worst <= 1e-8, worst, 0.0, 1e-8, "k <= " + std::to_string(k_top) + ", t in {0.5, 1, 5, 10}"};
}

CheckResult oracle_ball4(bool quick) {
    const int k_top = quick ? 6 : 8;
    double worst = 0.0;
    for (int k = 0; k <= k_top; ++k)
        for (int p1 = 0; p1 <= k; ++p1)
            for (double t : {0.5, 1.0, 2.0, 5.0}) {
                const double closed = ball4_sigma(p1, k - p1, t);
                worst = std::max(worst, std::abs(closed - oracle_steklov_value(RadialOdeParams::ball4(p1, k - p1, t))));
            }
    return {"", worst <= 1e-8, worst, 0.0, 1e-8, "p1 + p2 <= " + std::to_string(k_top) + ", t in {0.5, 1, 2, 5}"};
}

CheckResult coth_identity() {
    double worst = 0.0;
    for (double t : {0.1, 1.0, 5.0, 20.0})
        worst = std::max(worst, std::abs(ball4_sigma(0, 0, t) - (t / std::tanh(0.5 * t) - 2.0)));
    return {"", worst <= 1e-10, worst, 0.0, 1e-10, "t in {0.1, 1, 5, 20}"};
}

CheckResult non_magnetic(bool quick) {
    const int k_top = quick ? 8 : 20;
    double disk = 0.0, ball = 0.0;
    for (int k = 0; k <= k_top; ++k)
        for (auto sign : {ModeSign::plus, ModeSign::minus})
            disk = std::max(disk, std::abs(steklov_value(series_solve(RadialOdeParams::disk(k, sign, 0.0))) - k));
    for (int k = 0; k <= 8; ++k)
        for (int p1 = 0; p1 <= k; ++p1)
            ball = std::max(ball, std::abs(ball4_sigma(p1, k - p1, 1e-6) - k));
    return {"",
            disk <= 1e-12 && ball <= 1e-4,
            disk,
            0.0,
            1e-12,
            "4-ball at t = 1e-6: max deviation " + fmt(ball) + " (tolerance 1e-4)"};
}

CheckResult asymptotics() {
    const auto report = asymptotic_check({100.0, 200.0, 400.0});
    const double dev = std::abs(disk_first_eigenvalue(400.0) - asymptotic_prediction(400.0));
    const double exponent = report.detail("fitted_exponent");
    const bool ok = dev <= 0.05 && exponent >= 0.45 && exponent <= 0.55;
    return {"", ok, dev, 0.0, 0.05, "fitted exponent over {100, 200, 400}: " + fmt(exponent) + " (need [0.45, 0.55])"};
}

CheckResult monotonicity() {
    const auto report = monotonicity_check({0.5, 1, 2, 4, 8, 16, 32});
    return {"", report.satisfied, report.lhs, 0.0, 0.0, "smallest increment of sigma_1 on {0.5, 1, ..., 32}"};
}

CheckResult max_principle(bool quick) {
    const int k_top = quick ? 8 : 10;
    const std::vector<double> ts = quick ? std::vector<double>{0, 1, 5} : std::vector<double>{0, 1, 5, 50};
    const auto grid = uniform_grid(1001);
    double worst = 0.0;
    for (int k = 0; k <= k_top; ++k)
        for (auto sign : {ModeSign::plus, ModeSign::minus})
            for (double t : ts)
                worst = std::max(worst, max_principle_check(k, sign, t, grid).lhs);
    return {"", worst <= 1.0 + 1e-10, worst, 1.0, 1e-10, "max |Q r^k| on 1001 points"};
}

CheckResult subharmonic(bool quick) {
    const int k_top = quick ? 8 : 10;
    const std::vector<double> ts = quick ? std::vector<double>{0, 1, 5} : std::vector<double>{0, 1, 5, 50};
    double worst = 0.0;
    for (int k = 0; k <= k_top; ++k)
        for (auto sign : {ModeSign::plus, ModeSign::minus})
            for (double t : ts)
                worst = std::max(worst, subharmonic_l2_check(k, sign, t).lhs);
    const double equality = std::abs(subharmonic_l2_check(0, ModeSign::plus, 0.0).lhs - pi);
    return {"",
            worst <= pi + 1e-9 && equality <= 1e-12,
            worst,
            pi,
            1e-9,
            "k = 0, t = 0 equality gap " + fmt(equality) + " (tolerance 1e-12)"};
}

CheckResult frustration_forms() {
    double worst = std::abs(frustration(FrustrationSpec::power(1.0, 2, 0.0, 1.0, false)).value - 2 * pi / 3);
    worst = std::max(worst, std::abs(frustration(FrustrationSpec::power(1.0, 0, 0.0, 1.0, true)).value));
    for (int ell = 1; ell <= 6; ++ell)
        worst = std::max(worst, std::abs(frustration(FrustrationSpec::power(1.0, ell, 0.0, 1.0, true)).value -
                                         2 * pi / (ell + 1)));
    return {"", worst <= 1e-9, worst, 0.0, 1e-9, "r^2 on the disk, d theta and r^ell (1 <= ell <= 6) punctured"};
}

CheckResult upper_bound() {
    double worst = -1e300;
    for (double t : {0.25, 0.5, 1.0, 2.0, 4.0}) {
        const auto r = upper_bound_disk(t);
        worst = std::max(worst, r.lhs - r.rhs);
    }
    const double j01 = bessel_j0_first_zero();
    const double j_err = std::abs(j01 - 2.404825557695773);
    return {"",
            worst <= 1e-9 && j_err <= 1e-9,
            worst,
            0.0,
            1e-9,
            "max of sigma_1 - 2t^2/j01^2; j01 = " + fmt(j01) + " (error " + fmt(j_err) + ")"};
}

CheckResult gauge() {
    double worst = 0.0;
    bool ok = true;
    for (double t : {0.0, 0.3, 0.5, 0.77}) {
        const auto r = gauge_periodicity_check(t, 20);
        worst = std::max(worst, r.lhs);
        ok = ok && r.satisfied;
    }
    return {"", ok, worst, 0.0, 1e-12, "k_max = 20, t in {0, 0.3, 0.5, 0.77}"};
}

CheckResult comparison() {
    const auto table = comparison_report(Model::Disk2, {25.0, 100.0, 400.0}, 1);
    const auto& last = table.rows.back();
    const double root = last.detail("sqrt_lambda1");
    const bool ok = last.lhs > 10.0 && root <= 0.5 && table.status == ReportStatus::GapUnbounded;
    return {"", ok, last.lhs, 10.0, 0.0, "t = 400, sqrt(lambda_1) = " + fmt(root)};
}

std::vector<CheckResult> core_checks(bool quick) {
    std::vector<CheckResult> out;
    out.push_back(timed("oracle-equivalence-disk", [&] { return oracle_disk(quick); }));
    enforce_runtime(out.back(), 10.0);
    out.push_back(timed("oracle-equivalence-ball4", [&] { return oracle_ball4(quick); }));
    enforce_runtime(out.back(), 10.0);
    out.push_back(timed("closed-form-coth", coth_identity));
    out.push_back(timed("non-magnetic-reduction", [&] { return non_magnetic(quick); }));
    out.push_back(timed("asymptotics", asymptotics));
    enforce_runtime(out.back(), 30.0);
    out.push_back(timed("monotonicity", monotonicity));
    out.push_back(timed("maximum-principle", [&] { return max_principle(quick); }));
    out.push_back(timed("subharmonic-l2", [&] { return subharmonic(quick); }));
    out.push_back(timed("frustration-closed-forms", frustration_forms));
    out.push_back(timed("upper-bound-disk", upper_bound));
    out.push_back(timed("gauge-periodicity", gauge));
    out.push_back(timed("comparison-non-uniformity", comparison));
    return out;
}

std::string serialise(const std::vector<CheckResult>& checks) {
    Json arr = Json::array();
    for (const auto& c : checks)
        arr.push_back(json_check(c));
    return arr.dump(2);
}

} // namespace

std::vector<CheckResult> run_acceptance(const AcceptanceOptions& options) {
    auto checks = core_checks(options.quick);
    if (options.include_determinism) {
        checks.push_back(timed("determinism", [&] {
            const std::string first = serialise(checks);
            const std::string second = serialise(core_checks(options.quick));
            const bool same = first == second;
            return CheckResult{"", same, same ? 0.0 : 1.0, 0.0, 0.0,
                               "two runs of the suite serialise to " + std::to_string(first.size()) + " bytes each" +
                                   (same ? "" : " but differ")};
        }));
    }
    return checks;
}

bool all_passed(const std::vector<CheckResult>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

} // namespace magsteklov
