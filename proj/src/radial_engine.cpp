#include "magsteklov/radial_engine.hpp"

#include "magsteklov/errors.hpp"
#include "neumaier_sum.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace magsteklov {

namespace {

std::string describe(const RadialOdeParams& p) {
    std::ostringstream os;
    os << "(c=" << p.c << ", a=" << p.a << ", b=" << p.b << ", k=" << p.k_power << ")";
    return os.str();
}

// 4j(j + (c-1)/2), the indicial factor multiplying c_j.
double indicial(double c, std::size_t j) {
    const double jj = static_cast<double>(j);
    return 4.0 * jj * (jj + 0.5 * (c - 1.0));
}

SeriesForm resolve_form(const RadialOdeParams& p, SeriesForm requested) {
    if (requested != SeriesForm::automatic)
        return requested;
    return (p.a >= 0.0 || p.b == 0.0) ? SeriesForm::plain : SeriesForm::gaussian;
}

} // namespace

RadialOdeParams RadialOdeParams::disk(int k, ModeSign sign, double t) {
    const double s = sign == ModeSign::plus ? 1.0 : -1.0;
    return {2.0 * k + 1.0, s * 2.0 * k * t, t * t, k};
}

RadialOdeParams RadialOdeParams::ball4(int p1, int p2, double t) {
    const int k = p1 + p2;
    return {2.0 * k + 3.0, 2.0 * t * (2.0 * p1 - k), t * t, k};
}

void RadialOdeParams::validate() const {
    if (!std::isfinite(c) || !std::isfinite(a) || !std::isfinite(b))
        throw SpectralError(ErrorKind::InvalidParams, "non-finite coefficients " + describe(*this));
    if (c <= 0.0)
        throw SpectralError(ErrorKind::InvalidParams, "c must be positive " + describe(*this));
    if (b < 0.0)
        throw SpectralError(ErrorKind::InvalidParams, "b must be nonnegative " + describe(*this));
    if (k_power < 0)
        throw SpectralError(ErrorKind::InvalidParams, "k_power must be nonnegative " + describe(*this));
}

std::vector<double> RadialProfile::raw_coefficients() const {
    std::vector<double> raw(coeffs.size());
    const double scale = raw_sign * std::exp(scale_log);
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        raw[j] = coeffs[j] * scale;
    return raw;
}

RadialProfile series_solve(const RadialOdeParams& params, const SeriesOptions& options) {
    params.validate();

    RadialProfile out;
    out.params = params;
    out.form = resolve_form(params, options.form);
    const bool gaussian = out.form == SeriesForm::gaussian;
    const double root_b = std::sqrt(params.b);
    out.gauss_weight = gaussian ? 0.5 * root_b : 0.0;

    std::vector<double>& v = out.coeffs;
    v.reserve(256);
    v.push_back(1.0);
    double log_scale = 0.0;
    double running_max = 1.0;
    // Combined magnitude of the recursion inputs for the decay test below.
    const double drive = std::abs(params.a) + params.b;

    bool converged = false;
    for (std::size_t j = 1; j < options.max_terms; ++j) {
        const double denom = indicial(params.c, j);
        double next = 0.0;
        bool decaying = false;
        if (gaussian) {
            const double factor = (params.a + root_b * (4.0 * j - 3.0 + params.c)) / denom;
            next = factor * v[j - 1];
            decaying = std::abs(factor) < 0.5;
        } else {
            const double prev2 = j >= 2 ? v[j - 2] : 0.0;
            next = (params.a * v[j - 1] + params.b * prev2) / denom;
            decaying = denom > 2.0 * drive;
        }
        v.push_back(next);
        running_max = std::max(running_max, std::abs(next));

        if (running_max > options.rescale_threshold) {
            const double factor = 1.0 / running_max;
            for (double& x : v)
                x *= factor;
            log_scale += std::log(running_max);
            running_max = 1.0;
        }

        if (j >= 2 && decaying && std::abs(v[j]) <= options.tail_tol * running_max &&
            std::abs(v[j - 1]) <= options.tail_tol * running_max) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw SpectralError(ErrorKind::NonConvergence,
                            "series tail did not fall below tolerance within " +
                                std::to_string(options.max_terms) + " terms " + describe(params));

    detail::NeumaierSum<double> total;
    for (double x : v)
        total.add(x);
    const double sum = total.value();
    if (!(sum != 0.0) || !std::isfinite(sum))
        throw SpectralError(ErrorKind::DegenerateNormalization,
                            "series sums to zero at r = 1 " + describe(params));

    out.conditioning = std::abs(sum) / running_max;
    for (double& x : v)
        x /= sum;
    out.scale_log = log_scale + std::log(std::abs(sum));
    // Q(1) of the c_0 = 1 solution may be negative; Q(1) = 1 is kept and the
    // sign only shows up in the raw-coefficient view.
    out.raw_sign = sum < 0.0 ? -1.0 : 1.0;
    out.truncation_order = static_cast<int>(v.size()) - 1;
    out.normalized = true;
    return out;
}

double steklov_value(const RadialProfile& profile, double min_conditioning) {
    if (!profile.normalized)
        throw SpectralError(ErrorKind::InvalidParams, "profile is not normalized");
    if (profile.conditioning < min_conditioning)
        throw SpectralError(ErrorKind::DegenerateNormalization,
                            "|Q(1)| is " + std::to_string(profile.conditioning) +
                                " of the largest series term " + describe(profile.params));

    detail::NeumaierSum<double> value, slope;
    for (std::size_t j = 0; j < profile.coeffs.size(); ++j) {
        value.add(profile.coeffs[j]);
        slope.add(2.0 * static_cast<double>(j) * profile.coeffs[j]);
    }
    return profile.params.k_power + slope.value() / value.value() - 2.0 * profile.gauss_weight;
}

double evaluate_profile(const RadialProfile& profile, double r) {
    const double x = r * r;
    double h = 0.0;
    for (auto it = profile.coeffs.rbegin(); it != profile.coeffs.rend(); ++it)
        h = h * x + *it;
    if (h == 0.0)
        return 0.0;

    const int k = profile.params.k_power;
    if (r == 0.0)
        return k == 0 ? h * std::exp(profile.gauss_weight) : 0.0;
    const double log_mag = k * std::log(std::abs(r)) + profile.gauss_weight * (1.0 - x) + std::log(std::abs(h));
    return std::copysign(std::exp(log_mag), h);
}

double recursion_residual(const RadialProfile& profile) {
    const auto& v = profile.coeffs;
    const auto& p = profile.params;
    const double root_b = std::sqrt(p.b);

    double worst = 0.0;
    for (std::size_t j = 1; j < v.size(); ++j) {
        const double lhs = indicial(p.c, j) * v[j];
        double rhs = 0.0, size = std::abs(lhs);
        if (profile.form == SeriesForm::gaussian) {
            rhs = (p.a + root_b * (4.0 * j - 3.0 + p.c)) * v[j - 1];
            size += std::abs(rhs);
        } else {
            const double t1 = p.a * v[j - 1];
            const double t2 = p.b * (j >= 2 ? v[j - 2] : 0.0);
            rhs = t1 + t2;
            size += std::abs(t1) + std::abs(t2);
        }
        if (size > 0.0)
            worst = std::max(worst, std::abs(lhs - rhs) / size);
    }
    return worst;
}

namespace {

// Q'(r0)/Q(r0) from the plain series at a radius small enough that the terms
// do not cancel: |a| r0^2 <= 1 and sqrt(b) r0^2 <= 1.
double riccati_seed(const RadialOdeParams& p, double r0) {
    const double x = r0 * r0;
    // term_j = c_j x^j obeys the same recursion with a -> a x, b -> b x^2.
    double prev2 = 0.0, prev = 1.0;
    double value = 1.0, slope = 0.0;
    for (std::size_t j = 1; j < 2000; ++j) {
        const double term = (p.a * x * prev + p.b * x * x * prev2) / indicial(p.c, j);
        value += term;
        slope += 2.0 * static_cast<double>(j) * term;
        prev2 = prev;
        prev = term;
        if (j >= 2 && std::abs(prev) + std::abs(prev2) < 1e-19 * std::abs(value))
            break;
    }
    return slope / (r0 * value);
}

} // namespace

double log_derivative_solve(const RadialOdeParams& params, const RiccatiOptions& options) {
    params.validate();
    if (params.a == 0.0 && params.b == 0.0)
        return params.k_power;

    const double r0 = std::min(0.1, 1.0 / std::sqrt(1.0 + std::abs(params.a) + std::sqrt(params.b)));
    using State = std::array<double, 1>;
    State u{riccati_seed(params, r0)};

    const auto rhs = [&params](const State& y, State& dy, double r) {
        dy[0] = params.a + params.b * r * r - y[0] * y[0] - (params.c / r) * y[0];
    };

    std::size_t steps = 0;
    const auto observer = [&](const State& y, double r) {
        if (!std::isfinite(y[0]) || std::abs(y[0]) > options.pole_threshold)
            throw SpectralError(ErrorKind::RiccatiPole,
                                "log-derivative blew up near r = " + std::to_string(r) + " " + describe(params));
        if (++steps > options.max_steps)
            throw SpectralError(ErrorKind::NonConvergence, "Riccati step limit exceeded " + describe(params));
    };

    namespace odeint = boost::numeric::odeint;
    auto stepper = odeint::make_controlled(options.abs_tol, options.rel_tol,
                                           odeint::runge_kutta_cash_karp54<State>());
    odeint::integrate_adaptive(stepper, rhs, u, r0, 1.0, 1e-3 * r0, observer);
    if (!std::isfinite(u[0]))
        throw SpectralError(ErrorKind::RiccatiPole, "non-finite log-derivative at r = 1 " + describe(params));
    return u[0] + params.k_power;
}

double radial_steklov_value(const RadialOdeParams& params) {
    if (params.b > 1e4) {
        try {
            return log_derivative_solve(params);
        } catch (const SpectralError& e) {
            if (e.kind() != ErrorKind::RiccatiPole)
                throw;
        }
    }
    return steklov_value(series_solve(params));
}

} // namespace magsteklov
