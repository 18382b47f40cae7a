#include "magsteklov/emit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

namespace magsteklov {

std::string format_double(double x) {
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

Json json_number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

std::string csv_spectrum_header() { return "t,model,k,p1,p2,sign,value,multiplicity\n"; }

std::string csv_spectrum_rows(const SpectrumTable& table) {
    std::ostringstream os;
    for (const auto& e : table.entries) {
        const auto& l = e.label;
        os << format_double(table.t) << ',' << to_string(table.model) << ',';
        if (l.is_angular())
            os << l.k << ",,," << to_string(l.sign);
        else
            os << l.k << ',' << l.p1 << ',' << l.p2 << ',';
        os << ',' << format_double(e.value) << ',' << e.multiplicity << '\n';
    }
    return os.str();
}

Json json_spectrum_rows(const SpectrumTable& table) {
    Json rows = Json::array();
    for (const auto& e : table.entries) {
        const auto& l = e.label;
        Json row;
        row["t"] = json_number(table.t);
        row["model"] = to_string(table.model);
        row["k"] = l.k;
        row["p1"] = l.is_angular() ? Json(nullptr) : Json(l.p1);
        row["p2"] = l.is_angular() ? Json(nullptr) : Json(l.p2);
        row["sign"] = l.is_angular() ? Json(to_string(l.sign)) : Json(nullptr);
        row["value"] = json_number(e.value);
        row["multiplicity"] = e.multiplicity;
        rows.push_back(std::move(row));
    }
    return rows;
}

Json json_report(const BoundReport& report) {
    Json j;
    j["name"] = report.name;
    j["kind"] = to_string(report.kind);
    j["status"] = to_string(report.status);
    j["applicable"] = report.applicable;
    j["satisfied"] = report.satisfied;
    j["lhs"] = json_number(report.lhs);
    j["rhs"] = json_number(report.rhs);
    j["tolerance"] = json_number(report.tolerance);
    Json hyps = Json::array();
    for (const auto& h : report.hypotheses)
        hyps.push_back({{"description", h.description}, {"status", to_string(h.status)}});
    j["hypotheses"] = std::move(hyps);
    Json details = Json::object();
    for (const auto& [key, value] : report.details)
        details[key] = json_number(value);
    j["details"] = std::move(details);
    return j;
}

Json json_check(const CheckResult& check) {
    Json j;
    j["name"] = check.name;
    j["status"] = check.passed ? "pass" : "fail";
    j["lhs"] = json_number(check.lhs);
    j["rhs"] = json_number(check.rhs);
    j["tolerance"] = json_number(check.tolerance);
    j["detail"] = check.detail;
    return j;
}

Json json_frustration(const FrustrationSpec& spec, const FrustrationResult& result) {
    Json j;
    j["g"] = spec.description;
    j["r_inner"] = json_number(spec.r_inner);
    j["r_outer"] = json_number(spec.r_outer);
    j["punctured"] = spec.punctured;
    j["value"] = json_number(result.value);
    j["minimizing_integer"] = result.minimizing_integer;
    j["quadrature_error"] = json_number(result.quadrature_error);
    return j;
}

std::string csv_reports(const std::vector<BoundReport>& reports) {
    std::ostringstream os;
    os << "name,kind,status,applicable,satisfied,lhs,rhs,tolerance\n";
    for (const auto& r : reports)
        os << r.name << ',' << to_string(r.kind) << ',' << to_string(r.status) << ',' << (r.applicable ? 1 : 0)
           << ',' << (r.satisfied ? 1 : 0) << ',' << format_double(r.lhs) << ',' << format_double(r.rhs) << ','
           << format_double(r.tolerance) << '\n';
    return os.str();
}

namespace {

std::string label_key(const ModeLabel& l) {
    if (l.is_angular())
        return "k=" + std::to_string(l.k) + (l.k == 0 ? "" : (l.sign == ModeSign::plus ? "+" : "-"));
    return "(" + std::to_string(l.p1) + "," + std::to_string(l.p2) + ")";
}

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string fixed(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, 2);
    return std::string(buf, res.ptr);
}

} // namespace

std::string svg_spectrum(const std::vector<SpectrumTable>& tables, const std::string& title) {
    constexpr double width = 640, height = 420, left = 60, right = 20, top = 40, bottom = 50;
    std::map<std::string, std::vector<std::pair<double, double>>> series;
    std::vector<std::string> order;
    double t_lo = std::numeric_limits<double>::infinity(), t_hi = -t_lo;
    double v_lo = t_lo, v_hi = -t_lo;
    for (const auto& table : tables)
        for (const auto& e : table.entries) {
            if (!std::isfinite(e.value))
                continue;
            const auto key = label_key(e.label);
            auto [it, fresh] = series.try_emplace(key);
            if (fresh)
                order.push_back(key);
            it->second.emplace_back(table.t, e.value);
            t_lo = std::min(t_lo, table.t);
            t_hi = std::max(t_hi, table.t);
            v_lo = std::min(v_lo, e.value);
            v_hi = std::max(v_hi, e.value);
        }
    if (series.empty())
        t_lo = v_lo = 0.0, t_hi = v_hi = 1.0;
    if (t_hi == t_lo)
        t_hi = t_lo + 1.0;
    if (v_hi == v_lo)
        v_hi = v_lo + 1.0;
    const auto px = [&](double t) { return left + (t - t_lo) / (t_hi - t_lo) * (width - left - right); };
    const auto py = [&](double v) { return height - bottom - (v - v_lo) / (v_hi - v_lo) * (height - top - bottom); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" << escape_xml(title)
       << "</text>\n";
    // Axes with end-point ticks.
    os << "<line x1=\"" << left << "\" y1=\"" << height - bottom << "\" x2=\"" << width - right << "\" y2=\""
       << height - bottom << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << height - bottom
       << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << left << "\" y=\"" << height - bottom + 16 << "\" text-anchor=\"middle\">" << fixed(t_lo)
       << "</text>\n";
    os << "<text x=\"" << width - right << "\" y=\"" << height - bottom + 16 << "\" text-anchor=\"middle\">"
       << fixed(t_hi) << "</text>\n";
    os << "<text x=\"" << left - 6 << "\" y=\"" << height - bottom << "\" text-anchor=\"end\">" << fixed(v_lo)
       << "</text>\n";
    os << "<text x=\"" << left - 6 << "\" y=\"" << top + 4 << "\" text-anchor=\"end\">" << fixed(v_hi)
       << "</text>\n";
    os << "<text x=\"" << (left + width - right) / 2 << "\" y=\"" << height - 12 << "\" text-anchor=\"middle\">t</text>\n";
    os << "<text x=\"16\" y=\"" << (top + height - bottom) / 2 << "\" transform=\"rotate(-90 16 "
       << (top + height - bottom) / 2 << ")\" text-anchor=\"middle\">eigenvalue</text>\n";

    static constexpr const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                              "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
    std::size_t colour = 0;
    for (const auto& key : order) {
        auto points = series.at(key);
        std::stable_sort(points.begin(), points.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        os << "<polyline fill=\"none\" stroke=\"" << palette[colour++ % std::size(palette)]
           << "\" stroke-width=\"1.2\" points=\"";
        for (std::size_t i = 0; i < points.size(); ++i)
            os << (i ? " " : "") << fixed(px(points[i].first)) << ',' << fixed(py(points[i].second));
        os << "\"><title>" << escape_xml(key) << "</title></polyline>\n";
        const auto& end = points.back();
        os << "<text x=\"" << fixed(px(end.first) + 2) << "\" y=\"" << fixed(py(end.second)) << "\" font-size=\"8\">"
           << escape_xml(key) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string json_document(const std::string& command, const Json& config, const std::string& payload_key,
                          const Json& payload) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["config"] = config;
    doc[payload_key] = payload;
    return doc.dump(2) + "\n";
}

} // namespace magsteklov
