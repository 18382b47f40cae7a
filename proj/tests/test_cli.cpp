#include "magsteklov/cli.hpp"
#include "magsteklov/emit.hpp"

#include <doctest.h>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

using namespace magsteklov;
using namespace magsteklov::cli;

namespace {

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        n += c == '\n';
    return n;
}

RunConfig config_for(const std::string& command) {
    RunConfig c;
    c.command = command;
    return c;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("parse_range reads single values and start:step:stop grids") {
    CHECK(parse_range("1.5") == std::vector<double>{1.5});

    const auto grid = parse_range("0:0.1:5");
    REQUIRE(grid.size() == 51);
    CHECK(grid.front() == 0.0);
    CHECK(grid[3] == 0.3);
    CHECK(grid[7] == 0.7);
    CHECK(grid.back() == 5.0);

    CHECK(parse_range("2:1:2") == std::vector<double>{2.0});
    CHECK(parse_range("-1:0.5:0").size() == 3);
}

TEST_CASE("parse_range rejects malformed grids") {
    for (const char* bad : {"", "abc", "0:0:1", "0:-1:1", "1:0.5:0", "0:1", "0:1:2:3", "0:1:nan", "1e400"})
        CHECK_THROWS(parse_range(bad));
}

TEST_CASE("parse_power_sum evaluates polynomial terms") {
    std::string desc;
    const auto g = parse_power_sum("0.5*r^3 - 1 + 2*r", &desc);
    CHECK(g(2.0) == doctest::Approx(0.5 * 8 - 1 + 4));
    CHECK(g(0.0) == doctest::Approx(-1.0));
    CHECK_FALSE(desc.empty());

    CHECK(parse_power_sum("r^2")(3.0) == doctest::Approx(9.0));
    CHECK(parse_power_sum("r")(0.25) == doctest::Approx(0.25));
    CHECK(parse_power_sum("4")(7.0) == doctest::Approx(4.0));

    for (const char* bad : {"", "r^", "x^2", "2**r", "r^-1"})
        CHECK_THROWS(parse_power_sum(bad));
}

TEST_CASE("format_double writes the shortest round-trip form") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(2.0) == "2");
    CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
    CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");

    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> mant(-1.0, 1.0);
    std::uniform_int_distribution<int> expo(-300, 300);
    for (int i = 0; i < 2000; ++i) {
        const double x = std::ldexp(mant(rng), expo(rng));
        const std::string s = format_double(x);
        double back = 0.0;
        std::from_chars(s.data(), s.data() + s.size(), back);
        CHECK(back == x);
    }
}

TEST_CASE("json_number turns non-finite values into null") {
    CHECK(json_number(std::numeric_limits<double>::infinity()).is_null());
    CHECK(json_number(std::numeric_limits<double>::quiet_NaN()).is_null());
    CHECK(json_number(1.25) == Json(1.25));
}

TEST_CASE("spectrum CSV on a field-strength grid has one row per mode and t") {
    auto c = config_for("spectrum");
    c.t = "0:0.1:5";
    c.k_max = 5;
    const auto r = run(c);
    REQUIRE(r.exit_code == Success);
    CHECK(r.content.rfind(csv_spectrum_header(), 0) == 0);
    CHECK(count_lines(r.content) == 1 + 51 * 11);
}

TEST_CASE("circle spectrum JSON holds (k -+ t)^2") {
    auto c = config_for("spectrum");
    c.model = "circle";
    c.t = "0.5";
    c.k_max = 3;
    c.format = "json";
    const auto r = run(c);
    REQUIRE(r.exit_code == Success);
    const auto doc = Json::parse(r.content);
    CHECK(doc["schema_version"] == kSchemaVersion);
    CHECK(doc["command"] == "spectrum");
    const auto& rows = doc["rows"];
    REQUIRE(rows.size() == 7);
    for (const auto& row : rows) {
        const double k = row["k"].get<int>();
        const double expected = row["sign"] == "plus" ? (k + 0.5) * (k + 0.5) : (k - 0.5) * (k - 0.5);
        CHECK(row["value"].get<double>() == doctest::Approx(expected).epsilon(1e-14));
    }
}

TEST_CASE("ball4 lowest mode equals 2 coth(t/2) - 2") {
    auto c = config_for("spectrum");
    c.model = "ball4";
    c.t = "2";
    c.k_max = 0;
    const auto r = run(c);
    REQUIRE(r.exit_code == Success);
    CHECK(count_lines(r.content) == 2);
    const auto line = r.content.substr(r.content.find('\n') + 1);
    const double value = std::stod(line.substr(line.find(",,") + 2));
    CHECK(value == doctest::Approx(2.0 / std::tanh(1.0) - 2.0).epsilon(1e-12));
}

TEST_CASE("spectrum SVG is a well-formed drawing with one polyline per mode") {
    auto c = config_for("spectrum");
    c.model = "disk2";
    c.t = "0:0.5:2";
    c.k_max = 2;
    c.format = "svg";
    const auto r = run(c);
    REQUIRE(r.exit_code == Success);
    CHECK(r.content.find("<svg") != std::string::npos);
    CHECK(r.content.find("</svg>") != std::string::npos);
    std::size_t lines = 0, pos = 0;
    while ((pos = r.content.find("<polyline", pos)) != std::string::npos) {
        ++lines;
        ++pos;
    }
    CHECK(lines == 5);
}

TEST_CASE("frustration of the unit disk with g = r^2 is 2 pi / 3") {
    auto c = config_for("frustration");
    const auto r = run(c);
    REQUIRE(r.exit_code == Success);
    const auto doc = Json::parse(r.content);
    CHECK(doc["report"]["value"].get<double>() == doctest::Approx(2.0 * std::numbers::pi / 3.0).epsilon(1e-12));
    CHECK(doc["report"]["minimizing_integer"] == 0);
}

TEST_CASE("cheeger reports the estimate for each field strength") {
    auto c = config_for("cheeger");
    c.t = "1";
    c.s_grid = "0:0.25:0.75";
    const auto r = run(c);
    REQUIRE(r.exit_code == Success);
    CHECK_NOTHROW((void)Json::parse(r.content));
}

TEST_CASE("bounds exit codes follow the theorem status") {
    auto c = config_for("bounds");
    c.check = "upper";
    c.t = "1";
    CHECK(run(c).exit_code == Success);

    c.check = "asymptotic";
    c.t = "100:100:400";
    c.safety = 1e-3;
    CHECK(run(c).exit_code == CheckFailure);

    c.check = "nosuch";
    CHECK(run(c).exit_code == UsageError);
}

TEST_CASE("invalid input maps to usage errors and numeric trouble to exit 3") {
    auto c = config_for("spectrum");
    c.model = "nosuch";
    CHECK(run(c).exit_code == UsageError);

    c = config_for("spectrum");
    c.k_max = -1;
    CHECK(run(c).exit_code == UsageError);

    c = config_for("spectrum");
    c.format = "xml";
    CHECK(run(c).exit_code == UsageError);

    c = config_for("nosuch");
    CHECK(run(c).exit_code == UsageError);

    c = config_for("bounds");
    c.check = "gauge";
    c.t = "0.3";
    c.k_max = 1;
    CHECK(run(c).exit_code == NumericFailure);
}

TEST_CASE("identical configurations produce identical bytes") {
    auto c = config_for("spectrum");
    c.model = "ball4";
    c.t = "0:0.25:3";
    c.k_max = 4;
    c.format = "json";
    CHECK(run(c).content == run(c).content);

    auto b = config_for("bounds");
    b.t = "2";
    CHECK(run(b).content == run(b).content);
}

TEST_CASE("write_output replaces the target atomically") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "magsteklov_test_cli";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const fs::path target = dir / "out.txt";

    REQUIRE(write_output(target.string(), "first\n"));
    CHECK(slurp(target) == "first\n");
    REQUIRE(write_output(target.string(), "second\n"));
    CHECK(slurp(target) == "second\n");

    int entries = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir))
        ++entries;
    CHECK(entries == 1);

    CHECK_FALSE(write_output((dir / "missing" / "out.txt").string(), "x"));
    fs::remove_all(dir);
}
