#include "magsteklov/frustration.hpp"

#include "magsteklov/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace magsteklov {

namespace {

constexpr int kSamples = 2048;

double bisect_root(const std::function<double(double)>& f, double lo, double hi, double f_lo) {
    for (int it = 0; it < 200 && hi - lo > 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(hi));
         ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0)
            return mid;
        if ((fm < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Extremes of g on a uniform grid including both endpoints.
std::pair<double, double> sampled_range(const std::function<double(double)>& g, double lo, double hi) {
    double g_min = g(lo), g_max = g_min;
    for (int i = 1; i <= kSamples; ++i) {
        const double v = g(lo + (hi - lo) * i / kSamples);
        g_min = std::min(g_min, v);
        g_max = std::max(g_max, v);
    }
    return {g_min, g_max};
}

} // namespace

double integrate_abs(const std::function<double(double)>& f, double lo, double hi, double* error_estimate) {
    if (!(hi > lo))
        throw SpectralError(ErrorKind::InvalidParams, "integration interval is empty");

    std::vector<double> breaks{lo};
    double x_prev = lo, f_prev = f(lo);
    for (int i = 1; i <= kSamples; ++i) {
        const double x = lo + (hi - lo) * i / kSamples;
        const double fx = f(x);
        if (f_prev != 0.0 && fx != 0.0 && (f_prev < 0.0) != (fx < 0.0))
            breaks.push_back(bisect_root(f, x_prev, x, f_prev));
        else if (fx == 0.0 && i < kSamples)
            breaks.push_back(x);
        x_prev = x;
        f_prev = fx;
    }
    breaks.push_back(hi);

    using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;
    const auto integrand = [&f](double x) { return std::abs(f(x)); };
    double total = 0.0, err_total = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        if (breaks[i + 1] <= breaks[i])
            continue;
        double err = 0.0;
        total += Rule::integrate(integrand, breaks[i], breaks[i + 1], 15, 1e-14, &err);
        err_total += err;
    }
    if (!std::isfinite(total))
        throw SpectralError(ErrorKind::QuadratureFailure, "non-finite integral of |f|");
    if (error_estimate)
        *error_estimate = err_total;
    return total;
}

FrustrationSpec FrustrationSpec::power(double t, int ell, double r_inner, double r_outer, bool punctured) {
    FrustrationSpec spec;
    spec.g = [t, ell](double r) { return t * std::pow(r, ell); };
    spec.r_inner = r_inner;
    spec.r_outer = r_outer;
    spec.punctured = punctured || r_inner > 0.0;
    spec.description = std::to_string(t) + "*r^" + std::to_string(ell);
    return spec;
}

void FrustrationSpec::validate() const {
    if (!g)
        throw SpectralError(ErrorKind::InvalidParams, "angular profile g is not set");
    if (!(r_inner >= 0.0) || !(r_outer > r_inner) || !std::isfinite(r_outer))
        throw SpectralError(ErrorKind::InvalidParams, "need 0 <= r_inner < r_outer");
}

FrustrationResult frustration_simply_connected(const FrustrationSpec& spec) {
    spec.validate();
    if (spec.punctured || spec.r_inner > 0.0)
        throw SpectralError(ErrorKind::InvalidParams, "simply connected path needs a full disk");
    const double g0 = spec.g(0.0);
    if (std::abs(g0) > 1e-12)
        throw SpectralError(ErrorKind::IllDefinedAtOrigin,
                            "g(0) = " + std::to_string(g0) + "; the potential is singular at the origin");
    double err = 0.0;
    const double integral = integrate_abs(spec.g, 0.0, spec.r_outer, &err);
    return {2.0 * std::numbers::pi * integral, 0, 2.0 * std::numbers::pi * err};
}

FrustrationResult frustration_punctured(const FrustrationSpec& spec) {
    spec.validate();
    const auto [g_min, g_max] = sampled_range(spec.g, spec.r_inner, spec.r_outer);

    const auto objective = [&spec](long m, double* err) {
        const auto shifted = [&spec, m](double r) { return spec.g(r) + static_cast<double>(m); };
        return integrate_abs(shifted, spec.r_inner, spec.r_outer, err);
    };

    // The objective is convex in m: bisect on the sign of its forward difference.
    long lo = -static_cast<long>(std::ceil(g_max)) - 1;
    long hi = -static_cast<long>(std::floor(g_min)) + 1;
    while (lo < hi) {
        const long mid = lo + (hi - lo) / 2;
        if (objective(mid + 1, nullptr) < objective(mid, nullptr))
            lo = mid + 1;
        else
            hi = mid;
    }

    double err = 0.0;
    long best = lo;
    double best_value = objective(lo, &err);
    // Ties sit on a flat stretch of the convex objective; report the integer
    // closest to zero there.
    if (std::abs(lo + 1) < std::abs(lo)) {
        double e = 0.0;
        const double v = objective(lo + 1, &e);
        if (v <= best_value * (1.0 + 1e-13)) {
            best = lo + 1;
            best_value = v;
            err = e;
        }
    }
    return {2.0 * std::numbers::pi * best_value, best, 2.0 * std::numbers::pi * err};
}

FrustrationResult frustration(const FrustrationSpec& spec) {
    return spec.punctured ? frustration_punctured(spec) : frustration_simply_connected(spec);
}

} // namespace magsteklov
