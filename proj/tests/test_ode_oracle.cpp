#include "magsteklov/errors.hpp"
#include "magsteklov/ode_oracle.hpp"
#include "magsteklov/radial_engine.hpp"
#include "magsteklov/spectra_models.hpp"

#include <doctest.h>

#include <cmath>

using namespace magsteklov;

TEST_CASE("zero field returns the degree") {
    for (int k = 0; k <= 12; ++k)
        CHECK(std::abs(oracle_steklov_value(RadialOdeParams::disk(k, ModeSign::plus, 0.0)) - k) <= 1e-9);
    CHECK(std::abs(oracle_steklov_value({11.0, 0.0, 0.0, 5}) - 5.0) <= 1e-9);
}

TEST_CASE("k = 0, t = 1 against the series engine") {
    const RadialOdeParams p{1.0, 0.0, 1.0, 0};
    CHECK(std::abs(oracle_steklov_value(p) - steklov_value(series_solve(p))) <= 1e-8);
}

TEST_CASE("4-ball mode (2, 0) at t = 1 against the closed form") {
    const RadialOdeParams p{5.0, 4.0, 1.0, 2};
    // The same mode through the model constructor has c = 2k + 3 = 7.
    const auto q = RadialOdeParams::ball4(2, 0, 1.0);
    CHECK(q.a == 4.0);
    CHECK(std::abs(oracle_steklov_value(q) - ball4_sigma(2, 0, 1.0)) <= 1e-8);
    // With c = 5 the parameters describe a different problem, which the oracle
    // still integrates consistently with the series.
    CHECK(std::abs(oracle_steklov_value(p) - steklov_value(series_solve(p))) <= 1e-8);
}

TEST_CASE("oracle against series on the disk grid") {
    for (int k = 0; k <= 20; ++k)
        for (double t : {0.5, 1.0, 5.0, 10.0})
            for (auto sign : {ModeSign::plus, ModeSign::minus}) {
                const auto p = RadialOdeParams::disk(k, sign, t);
                CHECK(std::abs(oracle_steklov_value(p) - steklov_value(series_solve(p))) <= 1e-8);
            }
}

TEST_CASE("oracle against series on the 4-ball grid") {
    for (int k = 0; k <= 20; ++k)
        for (int p1 : {0, k / 2, k})
            for (double t : {0.5, 1.0, 5.0, 10.0}) {
                const auto p = RadialOdeParams::ball4(p1, k - p1, t);
                CHECK(std::abs(oracle_steklov_value(p) - steklov_value(series_solve(p))) <= 1e-8);
            }
}

TEST_CASE("seed radius robustness") {
    OracleConfig coarse, fine;
    fine.seed_radius = 1e-4;
    for (int k : {0, 1, 4, 10, 20})
        for (double t : {0.5, 1.0, 5.0, 10.0})
            for (auto sign : {ModeSign::plus, ModeSign::minus}) {
                const auto p = RadialOdeParams::disk(k, sign, t);
                CHECK(std::abs(oracle_steklov_value(p, coarse) - oracle_steklov_value(p, fine)) <= 1e-9);
            }
}

TEST_CASE("configuration and step limit errors") {
    const auto kind_of = [](auto&& f) {
        try {
            f();
        } catch (const SpectralError& e) {
            return e.kind();
        }
        return ErrorKind::Config;
    };
    const auto p = RadialOdeParams::disk(3, ModeSign::plus, 2.0);
    OracleConfig bad;
    bad.seed_radius = 1.5;
    CHECK(kind_of([&] { oracle_steklov_value(p, bad); }) == ErrorKind::InvalidParams);
    bad = {};
    bad.seed_radius = 0.0;
    CHECK(kind_of([&] { oracle_steklov_value(p, bad); }) == ErrorKind::InvalidParams);
    bad = {};
    bad.rel_tol = -1.0;
    CHECK(kind_of([&] { oracle_steklov_value(p, bad); }) == ErrorKind::InvalidParams);

    OracleConfig tiny;
    tiny.max_steps = 3;
    CHECK(kind_of([&] { oracle_steklov_value(RadialOdeParams::disk(5, ModeSign::plus, 30.0), tiny); }) ==
          ErrorKind::StepLimitExceeded);
}

TEST_CASE("a solution vanishing at the boundary is reported as singular") {
    // With a = -lambda and b = 0 the regular solution is J0(sqrt(lambda) r),
    // which vanishes at r = 1 when sqrt(lambda) is the first zero of J0.
    const double j01 = 2.404825557695773;
    try {
        oracle_steklov_value({1.0, -j01 * j01, 0.0, 0});
        FAIL("expected SingularSolution");
    } catch (const SpectralError& e) {
        CHECK(e.kind() == ErrorKind::SingularSolution);
    }
}
