#include "magsteklov/errors.hpp"
#include "magsteklov/ode_oracle.hpp"
#include "magsteklov/spectra_models.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

using namespace magsteklov;

namespace {

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const SpectralError& e) {
        return e.kind();
    }
    return ErrorKind::Config;
}

double coth_identity(double t) { return t / std::tanh(0.5 * t) - 2.0; }

} // namespace

TEST_CASE("labels") {
    const auto l = ModeLabel::angular(Model::Disk2, 0, ModeSign::minus);
    CHECK(l.sign == ModeSign::plus);
    const auto h = ModeLabel::hopf(Model::Ball4, 2, 3);
    CHECK(h.degree() == 5);
    CHECK_FALSE(h.is_angular());
    CHECK(to_string(Model::Sphere3) == "sphere3");
    CHECK(to_string(ModeSign::minus) == "minus");
}

TEST_CASE("disk spectrum at zero field") {
    const auto table = disk_steklov_spectrum(0.0, 3);
    const auto values = table.expanded_values();
    const std::vector<double> expected{0, 1, 1, 2, 2, 3, 3};
    REQUIRE(values.size() == expected.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        CHECK(std::abs(values[i] - expected[i]) <= 1e-12);
    CHECK(table.entries.size() == 7);
}

TEST_CASE("disk spectrum at t = 1, k_max = 1 matches the oracle") {
    const auto table = disk_steklov_spectrum(1.0, 1);
    REQUIRE(table.entries.size() == 3);
    for (const auto& e : table.entries) {
        const double oracle = oracle_steklov_value(RadialOdeParams::disk(e.label.k, e.label.sign, 1.0));
        CHECK(std::abs(e.value - oracle) <= 1e-8);
        CHECK(e.multiplicity == 1);
    }
}

TEST_CASE("disk spectrum under t -> -t swaps plus and minus") {
    for (double t : {0.4, 3.0, 12.0}) {
        const auto pos = disk_steklov_spectrum(t, 8);
        const auto neg = disk_steklov_spectrum(-t, 8);
        std::map<std::pair<int, int>, double> by_label;
        for (const auto& e : pos.entries)
            by_label[{e.label.k, static_cast<int>(e.label.sign)}] = e.value;
        for (const auto& e : neg.entries) {
            const auto flipped = e.label.k == 0 ? e.label.sign
                                                : (e.label.sign == ModeSign::plus ? ModeSign::minus : ModeSign::plus);
            CHECK(std::abs(e.value - by_label.at({e.label.k, static_cast<int>(flipped)})) <= 1e-12 * (1 + e.value));
        }
        const auto a = pos.expanded_values(), b = neg.expanded_values();
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            CHECK(std::abs(a[i] - b[i]) <= 1e-12 * (1 + a[i]));
    }
}

TEST_CASE("circle spectrum") {
    SUBCASE("t = 0.3") {
        const auto table = circle_laplacian_spectrum(0.3, 2);
        for (const auto& e : table.entries)
            if (e.label.k == 1)
                CHECK(e.value == doctest::Approx(e.label.sign == ModeSign::plus ? 1.69 : 0.49).epsilon(1e-14));
    }
    SUBCASE("t = 0") {
        const auto values = circle_laplacian_spectrum(0.0, 3).expanded_values();
        const std::vector<double> expected{0, 1, 1, 4, 4, 9, 9};
        CHECK(values == expected);
    }
    SUBCASE("lowest value is the squared distance to the integers") {
        CHECK(circle_laplacian_spectrum(0.4, 5).entries.front().value == doctest::Approx(0.16).epsilon(1e-14));
        CHECK(circle_laplacian_spectrum(2.7, 6).entries.front().value == doctest::Approx(0.09).epsilon(1e-12));
    }
}

TEST_CASE("4-ball closed form") {
    SUBCASE("coth identity for the (0, 0) mode") {
        for (double t : {0.1, 1.0, 5.0, 20.0})
            CHECK(std::abs(ball4_sigma(0, 0, t) - coth_identity(t)) <= 1e-10);
    }
    SUBCASE("F and G of the (0, 0) mode") {
        for (double t : {0.3, 1.0, 4.0}) {
            CHECK(ball4_F(0, 0, t) == doctest::Approx(std::exp(t / 2) * (t - 2)).epsilon(1e-13));
            CHECK(ball4_G(0, 0, t) == doctest::Approx(std::exp(t / 2)).epsilon(1e-13));
            const double ratio = (ball4_F(0, 0, t) - ball4_F(0, 0, -t)) / (ball4_G(0, 0, t) - ball4_G(0, 0, -t));
            CHECK(ratio == doctest::Approx(coth_identity(t)).epsilon(1e-12));
        }
    }
    SUBCASE("non-magnetic limit") {
        for (int k = 0; k <= 8; ++k)
            for (int p1 = 0; p1 <= k; ++p1)
                CHECK(std::abs(ball4_sigma(p1, k - p1, 1e-6) - k) <= 1e-4);
        CHECK(ball4_sigma(0, 0, 0.0) == 0.0);
        CHECK(ball4_sigma(2, 1, 0.0) == doctest::Approx(3.0).epsilon(1e-14));
    }
    SUBCASE("(1, 0) at t = 1 against the oracle") {
        CHECK(std::abs(ball4_sigma(1, 0, 1.0) - oracle_steklov_value(RadialOdeParams::ball4(1, 0, 1.0))) <= 1e-8);
    }
    SUBCASE("oracle agreement grid") {
        for (int k = 0; k <= 8; ++k)
            for (int p1 = 0; p1 <= k; ++p1)
                for (double t : {0.5, 1.0, 2.0, 5.0}) {
                    const double oracle = oracle_steklov_value(RadialOdeParams::ball4(p1, k - p1, t));
                    CHECK(std::abs(ball4_sigma(p1, k - p1, t) - oracle) <= 1e-8);
                }
    }
    SUBCASE("direct and Taylor evaluation agree where both are accurate") {
        for (int k = 0; k <= 6; ++k)
            for (int p1 = 0; p1 <= k; ++p1)
                for (double t : {0.5, 1.0, 1.5})
                    CHECK(std::abs(ball4_sigma_direct(p1, k - p1, t) - ball4_sigma_taylor(p1, k - p1, t)) <= 1e-10);
    }
    SUBCASE("direct evaluation refuses heavy cancellation") {
        CHECK(kind_of([] { ball4_sigma_direct(3, 2, 1e-6); }) == ErrorKind::CancellationLoss);
    }
    SUBCASE("invalid modes") {
        CHECK(kind_of([] { ball4_sigma(-1, 0, 1.0); }) == ErrorKind::InvalidParams);
    }
}

TEST_CASE("sphere spectrum") {
    CHECK(sphere3_eigenvalue(1, 1, 0.5) == doctest::Approx(8.25).epsilon(1e-15));
    CHECK(sphere3_eigenvalue(0, 1, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
    const auto table = sphere3_laplacian_spectrum(0.0, 6);
    std::map<int, int> cluster;
    for (const auto& e : table.entries) {
        CHECK(e.value == static_cast<double>(e.label.k * (e.label.k + 2)));
        cluster[e.label.k] += e.multiplicity;
    }
    for (const auto& [k, total] : cluster)
        CHECK(total == (k + 1) * (k + 1));

    const auto simple = sphere3_laplacian_spectrum(0.0, 3, Ball4Multiplicity::simple);
    for (const auto& e : simple.entries)
        CHECK(e.multiplicity == 1);
}

TEST_CASE("4-ball multiplicities total (k+1)^2 per degree") {
    const auto table = ball4_steklov_spectrum(0.7, 5);
    std::map<int, int> cluster;
    for (const auto& e : table.entries)
        cluster[e.label.degree()] += e.multiplicity;
    for (const auto& [k, total] : cluster)
        CHECK(total == (k + 1) * (k + 1));
}

TEST_CASE("paired gap tables") {
    SUBCASE("disk at zero field") {
        for (const auto& row : paired_gap_table(disk_steklov_spectrum(0.0, 12), circle_laplacian_spectrum(0.0, 12), 15))
            CHECK(std::abs(row.gap) <= 1e-12);
    }
    SUBCASE("4-ball at zero field") {
        const auto rows =
            paired_gap_table(ball4_steklov_spectrum(0.0, 6), sphere3_laplacian_spectrum(0.0, 6), 30);
        for (const auto& row : rows) {
            const double k = std::round(row.sigma);
            CHECK(row.gap == doctest::Approx(k - std::sqrt(k * (k + 2))).epsilon(1e-12));
            CHECK(row.gap > -1.0);
            CHECK(row.gap <= 0.0);
        }
    }
    SUBCASE("disk at t = 100") {
        const auto rows = paired_gap_table(reliable_spectrum(Model::Disk2, 100.0, 1),
                                           reliable_spectrum(Model::Circle, 100.0, 1), 1);
        CHECK(rows.front().sqrt_lambda <= 0.5);
        CHECK(rows.front().gap >= 5.0);
    }
    SUBCASE("errors") {
        CHECK(kind_of([] {
                  paired_gap_table(disk_steklov_spectrum(50.0, 3), circle_laplacian_spectrum(50.0, 3), 1);
              }) == ErrorKind::TruncationInsufficient);
        CHECK(kind_of([] {
                  paired_gap_table(disk_steklov_spectrum(1.0, 8), circle_laplacian_spectrum(2.0, 8), 1);
              }) == ErrorKind::InvalidParams);
        CHECK(kind_of([] { disk_steklov_spectrum(1.0, -1); }) == ErrorKind::InvalidParams);
    }
}

TEST_CASE("reliable spectrum reaches the requested rank") {
    for (auto model : {Model::Disk2, Model::Ball4, Model::Circle, Model::Sphere3})
        for (double t : {0.0, 1.5, 7.0}) {
            const auto table = reliable_spectrum(model, t, 12);
            CHECK(table.reliable_rank() >= 12);
            // A larger truncation leaves the certified values unchanged.
            SpectrumTable wider;
            switch (model) {
            case Model::Disk2: wider = disk_steklov_spectrum(t, table.k_max + 6); break;
            case Model::Ball4: wider = ball4_steklov_spectrum(t, table.k_max + 6); break;
            case Model::Circle: wider = circle_laplacian_spectrum(t, table.k_max + 6); break;
            case Model::Sphere3: wider = sphere3_laplacian_spectrum(t, table.k_max + 6); break;
            }
            const auto a = table.expanded_values(), b = wider.expanded_values();
            for (int i = 0; i < 12; ++i)
                CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-13));
        }
}

TEST_CASE("first disk eigenvalue") {
    CHECK(disk_first_eigenvalue(0.0) == 0.0);
    double prev = 0.0;
    for (double t : {0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0}) {
        const double s = disk_first_eigenvalue(t);
        CHECK(s > prev);
        prev = s;
    }
    // Independent minimum over the oracle values of the low modes.
    double oracle_min = 1e300;
    for (int k = 0; k <= 8; ++k)
        for (auto sign : {ModeSign::plus, ModeSign::minus})
            oracle_min = std::min(oracle_min, oracle_steklov_value(RadialOdeParams::disk(k, sign, 2.0)));
    CHECK(std::abs(disk_first_eigenvalue(2.0) - oracle_min) <= 1e-8);
}

TEST_CASE("tables are sorted with a deterministic tiebreak") {
    for (auto table : {disk_steklov_spectrum(0.0, 6), ball4_steklov_spectrum(0.0, 4), circle_laplacian_spectrum(0.5, 4),
                       sphere3_laplacian_spectrum(1.0, 4)}) {
        for (std::size_t i = 1; i < table.entries.size(); ++i) {
            const auto& a = table.entries[i - 1];
            const auto& b = table.entries[i];
            CHECK(a.value <= b.value);
            if (a.value == b.value)
                CHECK(a.label < b.label);
        }
    }
}

TEST_CASE("property: spectra are nonnegative") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> td(-30.0, 30.0);
    for (int trial = 0; trial < 25; ++trial) {
        const double t = td(rng);
        for (const auto& e : disk_steklov_spectrum(t, 10).entries)
            CHECK(e.value >= -1e-10);
        for (const auto& e : ball4_steklov_spectrum(t, 6).entries)
            CHECK(e.value >= -1e-10);
        for (const auto& e : sphere3_laplacian_spectrum(t, 8).entries)
            CHECK(e.value >= 0.0);
    }
}
