#include "magsteklov/ode_oracle.hpp"

#include "magsteklov/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace magsteklov {

void OracleConfig::validate() const {
    if (!(seed_radius > 0.0 && seed_radius < 1.0))
        throw SpectralError(ErrorKind::InvalidParams, "seed_radius must lie in (0, 1)");
    if (!(rel_tol > 0.0 && abs_tol > 0.0))
        throw SpectralError(ErrorKind::InvalidParams, "tolerances must be positive");
    if (seed_order < 1)
        throw SpectralError(ErrorKind::InvalidParams, "seed_order must be at least 1");
}

namespace {

using State = std::array<double, 2>; // (Q, Q')

struct RadialSystem {
    double c, a, b;

    State operator()(double r, const State& y) const {
        return {y[1], (a + b * r * r) * y[0] - (c / r) * y[1]};
    }
};

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// Difference between the 5th-order weights and the embedded 4th-order ones.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

State axpy(const State& y, double h, std::initializer_list<std::pair<double, const State*>> terms) {
    State out = y;
    for (const auto& [w, k] : terms)
        for (int i = 0; i < 2; ++i)
            out[i] += h * w * (*k)[i];
    return out;
}

// Frobenius seed of the regular solution with c_0 = 1, using at most
// `order` terms of 4j(j+(c-1)/2) c_j = a c_{j-1} + b c_{j-2}.
State frobenius_seed(const RadialOdeParams& p, double r0, int order) {
    double cm2 = 0.0, cm1 = 1.0;
    double q = 1.0, dq = 0.0;
    double rpow = 1.0; // r0^{2j}
    for (int j = 1; j < order; ++j) {
        const double cj = (p.a * cm1 + p.b * cm2) / (4.0 * j * (j + 0.5 * (p.c - 1.0)));
        rpow *= r0 * r0;
        q += cj * rpow;
        dq += 2.0 * j * cj * rpow / r0;
        cm2 = cm1;
        cm1 = cj;
    }
    return {q, dq};
}

} // namespace

double oracle_steklov_value(const RadialOdeParams& params, const OracleConfig& config) {
    params.validate();
    config.validate();

    const RadialSystem f{params.c, params.a, params.b};
    double r = config.seed_radius;
    State y = frobenius_seed(params, r, config.seed_order);
    double log_scale = 0.0;
    double peak_log = std::log(std::abs(y[0]));

    // Step bounded by the 1/r stiffness of the friction term near the seed.
    double h = std::min(0.1 * r / (1.0 + params.c), 1e-2);
    State k1 = f(r, y);
    std::size_t steps = 0;
    constexpr double safety = 0.9, min_factor = 0.2, max_factor = 5.0;

    while (r < 1.0) {
        if (++steps > config.max_steps)
            throw SpectralError(ErrorKind::StepLimitExceeded,
                                "oracle exceeded " + std::to_string(config.max_steps) + " steps");
        h = std::min(h, 1.0 - r);
        if (h < 1e-15 * std::max(1.0, r))
            throw SpectralError(ErrorKind::StepLimitExceeded, "oracle step size underflow at r = " + std::to_string(r));

        const State k2 = f(r + c2 * h, axpy(y, h, {{a21, &k1}}));
        const State k3 = f(r + c3 * h, axpy(y, h, {{a31, &k1}, {a32, &k2}}));
        const State k4 = f(r + c4 * h, axpy(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
        const State k5 = f(r + c5 * h, axpy(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
        const State k6 = f(r + h, axpy(y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
        const State y_next = axpy(y, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
        const State k7 = f(r + h, y_next);

        double err = 0.0;
        for (int i = 0; i < 2; ++i) {
            const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            const double sc = config.abs_tol + config.rel_tol * std::max(std::abs(y[i]), std::abs(y_next[i]));
            err = std::max(err, std::abs(e) / sc);
        }

        if (err <= 1.0) {
            r += h;
            y = y_next;
            k1 = k7; // first-same-as-last
            // The ODE is linear: renormalise to keep (Q, Q') near unit size.
            const double mag = std::max(std::abs(y[0]), std::abs(y[1]));
            if (mag > 1e100 || (mag < 1e-100 && mag > 0.0)) {
                for (double& v : y)
                    v /= mag;
                for (double& v : k1)
                    v /= mag;
                log_scale += std::log(mag);
            }
            peak_log = std::max(peak_log, log_scale + std::log(std::abs(y[0])));
        }
        const double factor = err == 0.0 ? max_factor : safety * std::pow(err, -0.2);
        h *= std::clamp(factor, min_factor, max_factor);
    }

    const double q1_log = log_scale + std::log(std::abs(y[0]));
    // Below about 100 rel_tol of the largest |Q| seen, Q(1) is indistinguishable
    // from integration error and the quotient Q'(1)/Q(1) carries no digits.
    if (y[0] == 0.0 || q1_log - peak_log < std::log(100.0 * config.rel_tol))
        throw SpectralError(ErrorKind::SingularSolution, "Q(1) vanishes relative to the trajectory");
    return params.k_power + y[1] / y[0];
}

} // namespace magsteklov
