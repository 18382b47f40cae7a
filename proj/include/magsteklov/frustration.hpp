#pragma once

// Magnetic frustration constants of rotationally symmetric potentials
// eta = r^k dr + g(r) dtheta on disks, punctured disks and annuli.
//
// The r^k dr part is exact and drops out. What remains reduces circle by
// circle: on a simply connected disk every gauge form integrates to zero
// around S_r, on a punctured disk or annulus to 2 pi m for one integer m.

#include <functional>
#include <string>

namespace magsteklov {

struct FrustrationSpec {
    /// Exponent of the exact r^k dr part; recorded only.
    int radial_power = 1;
    /// Angular coefficient g(r) of dtheta, continuous on [r_inner, r_outer].
    std::function<double(double)> g;
    double r_inner = 0.0;
    double r_outer = 1.0;
    /// True when the origin is removed or r_inner > 0.
    bool punctured = false;
    std::string description;

    /// g(r) = t r^ell.
    static FrustrationSpec power(double t, int ell, double r_inner, double r_outer, bool punctured);

    void validate() const;
};

struct FrustrationResult {
    double value = 0.0;
    long minimizing_integer = 0;
    double quadrature_error = 0.0;
};

/// 2 pi * integral of |g| over [0, r_outer].
FrustrationResult frustration_simply_connected(const FrustrationSpec& spec);

/// 2 pi * min over integers m of the integral of |g + m| over [r_inner, r_outer].
FrustrationResult frustration_punctured(const FrustrationSpec& spec);

/// Dispatches on spec.punctured.
FrustrationResult frustration(const FrustrationSpec& spec);

/// Integral of |f| over [lo, hi]; panels are split at the sign changes of f so
/// the integrand is smooth on each. Relative accuracy about 1e-12.
double integrate_abs(const std::function<double(double)>& f, double lo, double hi, double* error_estimate = nullptr);

} // namespace magsteklov
