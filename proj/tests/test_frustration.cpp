#include "magsteklov/errors.hpp"
#include "magsteklov/frustration.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace magsteklov;

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

FrustrationSpec custom(std::function<double(double)> g, double lo, double hi, bool punctured) {
    FrustrationSpec spec;
    spec.g = std::move(g);
    spec.r_inner = lo;
    spec.r_outer = hi;
    spec.punctured = punctured;
    return spec;
}

} // namespace

TEST_CASE("simply connected disk") {
    SUBCASE("r^2 on the unit disk") {
        const auto res = frustration(FrustrationSpec::power(1.0, 2, 0.0, 1.0, false));
        CHECK(std::abs(res.value - two_pi / 3) <= 1e-9 * two_pi / 3);
        CHECK(res.minimizing_integer == 0);
        CHECK(res.quadrature_error <= 1e-9);
    }
    SUBCASE("zero potential") {
        CHECK(frustration(custom([](double) { return 0.0; }, 0.0, 1.0, false)).value == 0.0);
    }
    SUBCASE("scaled family t r^2 on a disk of radius s") {
        for (double t : {0.5, 2.0, 9.0})
            for (double s : {0.2, 0.7, 1.0}) {
                const double expected = two_pi * t * s * s * s / 3;
                CHECK(frustration(FrustrationSpec::power(t, 2, 0.0, s, false)).value ==
                      doctest::Approx(expected).epsilon(1e-12));
            }
    }
    SUBCASE("general powers") {
        for (int ell = 1; ell <= 6; ++ell)
            CHECK(frustration(FrustrationSpec::power(1.0, ell, 0.0, 0.8, false)).value ==
                  doctest::Approx(two_pi * std::pow(0.8, ell + 1) / (ell + 1)).epsilon(1e-12));
    }
    SUBCASE("a sign-changing profile") {
        const auto res = frustration_simply_connected(custom([](double r) { return r * (r - 0.5); }, 0.0, 1.0, false));
        // integral of |r^2 - r/2| = 1/48 + (1/3 - 1/4 - (1/24 - 1/16)) = 1/48 + 5/48.
        CHECK(res.value == doctest::Approx(two_pi * 6.0 / 48).epsilon(1e-12));
    }
    SUBCASE("potential singular at the origin") {
        try {
            frustration_simply_connected(FrustrationSpec::power(1.0, 0, 0.0, 1.0, false));
            FAIL("expected IllDefinedAtOrigin");
        } catch (const SpectralError& e) {
            CHECK(e.kind() == ErrorKind::IllDefinedAtOrigin);
        }
    }
}

TEST_CASE("punctured disks and annuli") {
    SUBCASE("d theta is gauge trivial off the origin") {
        const auto res = frustration(FrustrationSpec::power(1.0, 0, 0.0, 1.0, true));
        CHECK(res.value <= 1e-12);
        CHECK(res.minimizing_integer == -1);
    }
    SUBCASE("r^ell on the punctured unit disk") {
        for (int ell = 1; ell <= 6; ++ell) {
            const auto res = frustration(FrustrationSpec::power(1.0, ell, 0.0, 1.0, true));
            CHECK(std::abs(res.value - two_pi / (ell + 1)) <= 1e-9);
            CHECK(res.minimizing_integer == 0);
        }
    }
    SUBCASE("g = r on [0, 2] shifts by one") {
        const auto res = frustration(FrustrationSpec::power(1.0, 1, 0.0, 2.0, true));
        CHECK(res.value == doctest::Approx(two_pi).epsilon(1e-12));
        CHECK(res.minimizing_integer == -1);
    }
    SUBCASE("annulus 0.5 < r < 1 with g = r^2") {
        // m = 0 gives (1 - 1/8)/3 = 7/24, but m = -1 gives 1/2 - 7/24 = 5/24.
        const auto res = frustration(FrustrationSpec::power(1.0, 2, 0.5, 1.0, true));
        CHECK(res.value == doctest::Approx(two_pi * 5.0 / 24).epsilon(1e-12));
        CHECK(res.minimizing_integer == -1);
        const double unshifted = two_pi * integrate_abs([](double r) { return r * r; }, 0.5, 1.0);
        CHECK(unshifted == doctest::Approx(two_pi * 7.0 / 24).epsilon(1e-12));
        CHECK(res.value < unshifted);
    }
}

TEST_CASE("property: integer gauge shifts leave the value unchanged") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> td(0.1, 7.0);
    std::uniform_int_distribution<int> shift(-5, 5), ell_d(0, 4);
    for (int trial = 0; trial < 40; ++trial) {
        const double t = td(rng);
        const int ell = ell_d(rng), n = shift(rng);
        const auto base = frustration_punctured(custom([=](double r) { return t * std::pow(r, ell); }, 0.1, 1.3, true));
        const auto moved =
            frustration_punctured(custom([=](double r) { return t * std::pow(r, ell) + n; }, 0.1, 1.3, true));
        CHECK(moved.value == doctest::Approx(base.value).epsilon(1e-10));
        CHECK(moved.value <= base.value + 1e-12 + 1e-10 * base.value);
    }
}

TEST_CASE("property: the integer scan finds the global minimum") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> td(0.1, 12.0);
    for (int trial = 0; trial < 30; ++trial) {
        const double t = td(rng);
        auto spec = FrustrationSpec::power(t, 3, 0.0, 1.0, true);
        const auto res = frustration_punctured(spec);
        for (long m = -20; m <= 20; ++m) {
            const double v = two_pi * integrate_abs([&](double r) { return spec.g(r) + m; }, 0.0, 1.0);
            CHECK(res.value <= v + 1e-10);
        }
    }
}

TEST_CASE("property: simply connected value grows with the field") {
    double prev = -1.0;
    for (double t = 0.0; t <= 5.0; t += 0.25) {
        const double v = frustration(FrustrationSpec::power(t, 2, 0.0, 1.0, false)).value;
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("continuity in the interval endpoints") {
    const double limit = frustration(FrustrationSpec::power(2.5, 2, 0.3, 1.0, true)).value;
    for (double h : {1e-2, 1e-4, 1e-6}) {
        const double v = frustration(FrustrationSpec::power(2.5, 2, 0.3 + h, 1.0, true)).value;
        CHECK(std::abs(v - limit) <= 20.0 * h);
    }
}

TEST_CASE("quadrature of |f| against closed forms") {
    CHECK(integrate_abs([](double x) { return std::sin(x); }, 0.0, 2 * std::numbers::pi) ==
          doctest::Approx(4.0).epsilon(1e-12));
    CHECK(integrate_abs([](double x) { return x * x - 2.0; }, 0.0, 3.0) ==
          doctest::Approx(3.0 + 8.0 * std::sqrt(2.0) / 3.0).epsilon(1e-12));
    CHECK_THROWS_AS(integrate_abs([](double x) { return x; }, 1.0, 1.0), SpectralError);
}

TEST_CASE("invalid specs") {
    CHECK_THROWS_AS(frustration(custom([](double r) { return r; }, 0.5, 0.2, true)), SpectralError);
    FrustrationSpec empty;
    CHECK_THROWS_AS(frustration(empty), SpectralError);
}
