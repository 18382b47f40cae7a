#pragma once

// Radial factor of eta-harmonic extensions on the unit 2- and 4-ball.
//
// Every supported mode reduces to the singular ODE
//
//     Q'' + (c/r) Q' - (a + b r^2) Q = 0,   Q'(0) = 0,  Q(1) = 1,
//
// and the Steklov eigenvalue of the mode is Q'(1) + k. The regular solution
// is an even power series in r, solved here by its Frobenius recursion.

#include <cstddef>
#include <vector>

namespace magsteklov {

enum class ModeSign { plus, minus };

/// Coefficients (c, a, b) of the radial ODE plus the degree k of the r^k
/// prefactor of the full extension.
struct RadialOdeParams {
    double c = 1.0;
    double a = 0.0;
    double b = 0.0;
    int k_power = 0;

    /// Mode e^{+-ik theta} on the disk with potential t(-y dx + x dy).
    static RadialOdeParams disk(int k, ModeSign sign, double t);
    /// Mode u^{p1} v^{p2} on the 4-ball with the Hopf potential scaled by t.
    static RadialOdeParams ball4(int p1, int p2, double t);

    /// Throws InvalidParams unless c > 0, b >= 0, k_power >= 0 and all finite.
    void validate() const;
};

enum class SeriesForm {
    /// Q = sum c_j r^{2j} with 4j(j+(c-1)/2) c_j = a c_{j-1} + b c_{j-2}.
    plain,
    /// Q = e^{-sqrt(b) r^2 / 2} sum p_j r^{2j}; two-term recursion
    /// 4j(j+(c-1)/2) p_j = (a + sqrt(b)(4j-3+c)) p_{j-1}, whose coefficients
    /// stay positive for every supported mode (no cancellation at r = 1).
    gaussian,
    /// plain when it is cancellation free (a >= 0 or b == 0), gaussian otherwise.
    automatic,
};

struct SeriesOptions {
    SeriesForm form = SeriesForm::automatic;
    std::size_t max_terms = 10000;
    double tail_tol = 1e-16;
    /// Coefficients are rescaled into scale_log once their magnitude passes this.
    double rescale_threshold = 1e150;
    /// steklov_value refuses profiles whose |sum c_j| / max|c_j| falls below this.
    double min_conditioning = 1e-6;
};

/// Truncated, normalised even-power series for Q.
///
/// Q(r) = exp(w (1 - r^2)) * sum_j coeffs[j] r^{2j}, with w = gauss_weight
/// (zero for the plain form) and sum_j coeffs[j] = 1, so Q(1) = 1. The
/// recursion coefficients seeded with c_0 = 1 equal
/// raw_sign * coeffs[j] * exp(scale_log).
struct RadialProfile {
    RadialOdeParams params;
    SeriesForm form = SeriesForm::plain;
    double gauss_weight = 0.0;
    std::vector<double> coeffs;
    double scale_log = 0.0;
    double raw_sign = 1.0;
    int truncation_order = 0;
    bool normalized = false;
    /// |sum of raw coefficients| / max |raw coefficient|; small values mean the
    /// value at r = 1 came out of heavy cancellation.
    double conditioning = 1.0;

    /// Recursion coefficients with c_0 = 1; only meaningful while exp(scale_log)
    /// is representable.
    std::vector<double> raw_coefficients() const;
};

RadialProfile series_solve(const RadialOdeParams& params, const SeriesOptions& options = {});

/// k + Q'(1)/Q(1) from the profile coefficients.
double steklov_value(const RadialProfile& profile, double min_conditioning = 1e-6);

/// r^k Q(r), evaluated by Horner's rule in r^2 with the scale applied in log space.
double evaluate_profile(const RadialProfile& profile, double r);

/// Largest residual of the defining recursion over the retained indices, each
/// relative to the summed magnitudes of the terms at that index. Coefficients
/// far below the peak are compared with their own size rather than the peak.
double recursion_residual(const RadialProfile& profile);

struct RiccatiOptions {
    double abs_tol = 1e-13;
    double rel_tol = 1e-13;
    std::size_t max_steps = 2'000'000;
    /// |u| above this is treated as a pole of the log-derivative.
    double pole_threshold = 1e12;
};

/// Integrates u = Q'/Q, u' = a + b r^2 - u^2 - (c/r) u, from a short series
/// seed near the origin to r = 1 and returns u(1) + k.
double log_derivative_solve(const RadialOdeParams& params, const RiccatiOptions& options = {});

/// Steklov value by the default route: log-derivative integration when
/// b > 1e4, the normalised series otherwise.
double radial_steklov_value(const RadialOdeParams& params);

} // namespace magsteklov
