#include "magsteklov/cli.hpp"

#include "magsteklov/acceptance.hpp"
#include "magsteklov/bounds.hpp"
#include "magsteklov/cheeger.hpp"
#include "magsteklov/emit.hpp"
#include "magsteklov/errors.hpp"
#include "magsteklov/frustration.hpp"
#include "magsteklov/spectra_models.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

namespace magsteklov::cli {

namespace {

[[noreturn]] void config_error(const std::string& message) { throw SpectralError(ErrorKind::Config, message); }

double parse_number(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        config_error("cannot read " + what + " from '" + text + "'");
    }
    if (used != text.size() || !std::isfinite(value))
        config_error("cannot read " + what + " from '" + text + "'");
    return value;
}

double round12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::stod(buf);
}

Model parse_model(const std::string& name) {
    if (name == "disk2")
        return Model::Disk2;
    if (name == "ball4")
        return Model::Ball4;
    if (name == "circle")
        return Model::Circle;
    if (name == "sphere3")
        return Model::Sphere3;
    config_error("unknown model '" + name + "' (expected disk2, ball4, circle or sphere3)");
}

ModeSign parse_sign(const std::string& name) {
    if (name == "plus" || name == "+")
        return ModeSign::plus;
    if (name == "minus" || name == "-")
        return ModeSign::minus;
    config_error("unknown sign '" + name + "' (expected plus or minus)");
}

std::string resolved_format(const RunConfig& c, const std::string& fallback) {
    const std::string f = c.format.empty() ? fallback : c.format;
    if (f != "csv" && f != "json" && f != "svg")
        config_error("unknown format '" + f + "' (expected csv, json or svg)");
    return f;
}

Json number_list(const std::vector<double>& xs) {
    Json arr = Json::array();
    for (double x : xs)
        arr.push_back(json_number(x));
    return arr;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

bool theorem_failed(const BoundReport& r) {
    return r.kind == ReportKind::Theorem && r.applicable && !r.satisfied;
}

} // namespace

std::vector<double> parse_range(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string part; std::getline(ss, part, ':');)
        parts.push_back(part);
    if (parts.size() == 1)
        return {parse_number(parts[0], "a value")};
    if (parts.size() != 3)
        config_error("range '" + spec + "' must be a value or start:step:stop");
    const double a = parse_number(parts[0], "range start");
    const double step = parse_number(parts[1], "range step");
    const double b = parse_number(parts[2], "range stop");
    if (!(step > 0.0))
        config_error("range step must be positive");
    if (b < a)
        config_error("range stop must not be below its start");
    const long count = static_cast<long>(std::floor((b - a) / step + 1e-9)) + 1;
    if (count > 1'000'000)
        config_error("range '" + spec + "' has too many points");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i)
        out.push_back(round12(a + static_cast<double>(i) * step));
    return out;
}

std::function<double(double)> parse_power_sum(const std::string& expr, std::string* description) {
    struct Term {
        double coef;
        int power;
    };
    std::vector<Term> terms;
    std::string s;
    for (char c : expr)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.empty())
        config_error("empty expression for g");

    std::size_t i = 0;
    const auto bad = [&] { config_error("cannot parse g = '" + expr + "'; expected terms like 2*r^3, r, or 0.5"); };
    while (i < s.size()) {
        double sign = 1.0;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1.0 : 1.0;
            ++i;
        } else if (!terms.empty()) {
            bad();
        }
        double coef = 1.0;
        bool have_coef = false;
        std::size_t j = i;
        while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '.' || s[j] == 'e' ||
                                s[j] == 'E' || ((s[j] == '-' || s[j] == '+') && j > i && (s[j - 1] == 'e' || s[j - 1] == 'E'))))
            ++j;
        if (j > i) {
            coef = parse_number(s.substr(i, j - i), "a coefficient");
            have_coef = true;
            i = j;
            if (i < s.size() && s[i] == '*')
                ++i;
        }
        int power = 0;
        if (i < s.size() && s[i] == 'r') {
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t k = i;
                while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])))
                    ++k;
                if (k == i)
                    bad();
                power = std::stoi(s.substr(i, k - i));
                i = k;
            }
        } else if (!have_coef) {
            bad();
        }
        terms.push_back({sign * coef, power});
    }

    if (description) {
        std::string d;
        for (const auto& t : terms) {
            if (!d.empty() || t.coef < 0)
                d += t.coef < 0 ? (d.empty() ? "-" : " - ") : " + ";
            d += format_double(std::abs(t.coef));
            if (t.power > 0)
                d += "*r^" + std::to_string(t.power);
        }
        *description = d;
    }
    return [terms](double r) {
        double sum = 0.0;
        for (const auto& t : terms)
            sum += t.coef * std::pow(r, t.power);
        return sum;
    };
}

CommandResult cmd_spectrum(const RunConfig& c) {
    const Model model = parse_model(c.model);
    const auto ts = parse_range(c.t);
    const std::string format = resolved_format(c, "csv");
    if (c.k_max < 0)
        config_error("k-max must be nonnegative");
    Ball4Multiplicity policy = Ball4Multiplicity::per_weight_space;
    if (c.multiplicity == "simple")
        policy = Ball4Multiplicity::simple;
    else if (c.multiplicity != "per-weight-space")
        config_error("unknown multiplicity policy '" + c.multiplicity + "'");

    std::vector<SpectrumTable> tables;
    for (double t : ts) {
        switch (model) {
        case Model::Disk2: tables.push_back(disk_steklov_spectrum(t, c.k_max)); break;
        case Model::Ball4: tables.push_back(ball4_steklov_spectrum(t, c.k_max, policy)); break;
        case Model::Circle: tables.push_back(circle_laplacian_spectrum(t, c.k_max)); break;
        case Model::Sphere3: tables.push_back(sphere3_laplacian_spectrum(t, c.k_max, policy)); break;
        }
    }

    CommandResult out;
    if (format == "csv") {
        out.content = csv_spectrum_header();
        for (const auto& table : tables)
            out.content += csv_spectrum_rows(table);
    } else if (format == "json") {
        Json rows = Json::array();
        for (const auto& table : tables)
            for (auto& row : json_spectrum_rows(table))
                rows.push_back(std::move(row));
        const Json config{{"model", c.model}, {"t", number_list(ts)}, {"k_max", c.k_max}, {"multiplicity", c.multiplicity}};
        out.content = json_document("spectrum", config, "rows", rows);
    } else {
        out.content = svg_spectrum(tables, to_string(model) + " spectrum, k <= " + std::to_string(c.k_max));
    }
    std::size_t rows = 0;
    for (const auto& table : tables)
        rows += table.entries.size();
    out.summary = std::to_string(ts.size()) + " field strengths, " + std::to_string(rows) + " rows\n";
    return out;
}

CommandResult cmd_frustration(const RunConfig& c) {
    const std::string format = resolved_format(c, "json");
    if (format == "svg")
        config_error("frustration has no svg output");
    FrustrationSpec spec;
    spec.g = parse_power_sum(c.g, &spec.description);
    spec.r_inner = c.r_inner;
    spec.r_outer = c.r0;
    spec.punctured = c.punctured || c.r_inner > 0.0;
    spec.validate();
    const auto result = frustration(spec);

    CommandResult out;
    if (format == "csv") {
        out.content = "g,r_inner,r_outer,punctured,value,minimizing_integer\n" + csv_field(spec.description) + ',' +
                      format_double(spec.r_inner) + ',' + format_double(spec.r_outer) + ',' +
                      (spec.punctured ? "1" : "0") + ',' + format_double(result.value) + ',' +
                      std::to_string(result.minimizing_integer) + '\n';
    } else {
        const Json config{{"g", c.g}, {"r_inner", c.r_inner}, {"r0", c.r0}, {"punctured", spec.punctured}};
        out.content = json_document("frustration", config, "report", json_frustration(spec, result));
    }
    out.summary = "frustration " + format_double(result.value) + " (m = " + std::to_string(result.minimizing_integer) + ")\n";
    return out;
}

CommandResult cmd_cheeger(const RunConfig& c) {
    const std::string format = resolved_format(c, "json");
    if (format == "svg")
        config_error("cheeger has no svg output");
    const auto ts = parse_range(c.t);
    const auto grid = parse_range(c.s_grid);
    std::vector<BoundReport> reports;
    for (double t : ts)
        reports.push_back(jammes_diagnostic(t, grid));

    CommandResult out;
    if (format == "csv") {
        out.content = csv_reports(reports);
    } else {
        Json arr = Json::array();
        for (const auto& r : reports)
            arr.push_back(json_report(r));
        const Json config{{"t", number_list(ts)}, {"s_grid", number_list(grid)}};
        out.content = json_document("cheeger", config, "report", Json{{"reports", arr}});
    }
    for (const auto& r : reports)
        out.summary += r.name + " t=" + format_double(r.detail("t")) + ": " + to_string(r.status) + '\n';
    return out;
}

CommandResult cmd_bounds(const RunConfig& c) {
    const std::string format = resolved_format(c, "json");
    if (format == "svg")
        config_error("bounds has no svg output");
    const auto ts = parse_range(c.t);
    const std::string& which = c.check;
    const bool all = which == "all";
    static const std::vector<std::string> known{"all",        "upper",     "reilly", "max-principle", "l2",
                                                "asymptotic", "monotonicity", "gauge", "comparison"};
    if (std::find(known.begin(), known.end(), which) == known.end())
        config_error("unknown check '" + which + "'");

    std::vector<BoundReport> reports;
    Json comparison = nullptr;
    const auto grid_or = [&](std::vector<double> defaults) { return all ? defaults : ts; };

    if (all || which == "upper")
        for (double t : grid_or({0.25, 0.5, 1, 2, 4}))
            reports.push_back(upper_bound_disk(t));
    if (all || which == "reilly")
        for (double t : grid_or({0, 0.5, 1}))
            reports.push_back(reilly_flat_disk(t));
    if (all || which == "max-principle" || which == "l2") {
        const auto grid = uniform_grid(c.grid_points);
        const std::vector<int> ks = all ? std::vector<int>{0, 1, 2, 5, 10} : std::vector<int>{c.k};
        const std::vector<ModeSign> signs =
            all ? std::vector<ModeSign>{ModeSign::plus, ModeSign::minus} : std::vector<ModeSign>{parse_sign(c.sign)};
        for (int k : ks)
            for (auto sign : signs)
                for (double t : grid_or({0, 1, 5, 50})) {
                    if (all || which == "max-principle")
                        reports.push_back(max_principle_check(k, sign, t, grid));
                    if (all || which == "l2")
                        reports.push_back(subharmonic_l2_check(k, sign, t));
                }
    }
    if (all || which == "asymptotic")
        reports.push_back(asymptotic_check(grid_or({100, 200, 400}), c.safety));
    if (all || which == "monotonicity")
        reports.push_back(monotonicity_check(grid_or({0.5, 1, 2, 4, 8, 16, 32})));
    if (all || which == "gauge")
        for (double t : grid_or({0, 0.3, 0.5, 0.77}))
            reports.push_back(gauge_periodicity_check(t, all ? 20 : c.k_max));
    if (all || which == "comparison") {
        const Model model = all ? Model::Disk2 : parse_model(c.model);
        const auto table = comparison_report(model, grid_or({25, 100, 400}), all ? 1 : c.n, c.candidate_constant);
        reports.insert(reports.end(), table.rows.begin(), table.rows.end());
        comparison = Json{{"model", to_string(model)},
                          {"status", to_string(table.status)},
                          {"max_gap", json_number(table.max_gap)},
                          {"candidate_constant", json_number(table.candidate_constant)}};
    }

    CommandResult out;
    if (format == "csv") {
        out.content = csv_reports(reports);
    } else {
        Json arr = Json::array();
        for (const auto& r : reports)
            arr.push_back(json_report(r));
        Json payload{{"reports", arr}};
        if (!comparison.is_null())
            payload["comparison"] = comparison;
        const Json config{{"check", which},   {"t", all ? Json("defaults") : number_list(ts)},
                          {"k", c.k},         {"sign", c.sign},
                          {"k_max", c.k_max}, {"model", c.model},
                          {"n", c.n},         {"candidate_constant", c.candidate_constant},
                          {"safety", c.safety}, {"grid_points", c.grid_points}};
        out.content = json_document("bounds", config, "report", payload);
    }
    for (const auto& r : reports) {
        out.summary += r.name + ": " + to_string(r.status) + '\n';
        if (theorem_failed(r))
            out.exit_code = CheckFailure;
    }
    return out;
}

CommandResult cmd_verify(const RunConfig& c) {
    const std::string format = resolved_format(c, "json");
    if (format == "svg")
        config_error("verify has no svg output");
    AcceptanceOptions options;
    options.quick = c.quick;
    const auto checks = run_acceptance(options);
    const bool ok = all_passed(checks);

    CommandResult out;
    if (format == "csv") {
        out.content = "name,status,lhs,rhs,tolerance,detail\n";
        for (const auto& ch : checks)
            out.content += ch.name + ',' + (ch.passed ? "pass" : "fail") + ',' + format_double(ch.lhs) + ',' +
                           format_double(ch.rhs) + ',' + format_double(ch.tolerance) + ',' + csv_field(ch.detail) +
                           '\n';
    } else {
        Json arr = Json::array();
        for (const auto& ch : checks)
            arr.push_back(json_check(ch));
        out.content = json_document("verify", Json{{"quick", c.quick}}, "report",
                                    Json{{"passed", ok}, {"checks", arr}});
    }
    for (const auto& ch : checks)
        out.summary += std::string(ch.passed ? "PASS " : "FAIL ") + ch.name + "  lhs=" + format_double(ch.lhs) +
                       " rhs=" + format_double(ch.rhs) + " tol=" + format_double(ch.tolerance) + "  " + ch.detail +
                       '\n';
    out.summary += ok ? "all checks passed\n" : "some checks failed\n";
    out.exit_code = ok ? Success : CheckFailure;
    return out;
}

CommandResult run(const RunConfig& config) {
    try {
        if (config.command == "spectrum")
            return cmd_spectrum(config);
        if (config.command == "frustration")
            return cmd_frustration(config);
        if (config.command == "cheeger")
            return cmd_cheeger(config);
        if (config.command == "bounds")
            return cmd_bounds(config);
        if (config.command == "verify")
            return cmd_verify(config);
        config_error("unknown command '" + config.command + "'");
    } catch (const SpectralError& e) {
        const bool usage = e.kind() == ErrorKind::Config || e.kind() == ErrorKind::InvalidParams;
        return {usage ? UsageError : NumericFailure, "", "error: " + std::string(e.what()) + '\n'};
    }
}

bool write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        std::cout.flush();
        return static_cast<bool>(std::cout);
    }
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp" + std::to_string(::getpid());
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        os << content;
        os.close();
        if (!os) {
            std::error_code ec;
            fs::remove(tmp, ec);
            return false;
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        return false;
    }
    return true;
}

} // namespace magsteklov::cli
