#pragma once

// Serialisation of tables and reports to CSV, JSON and SVG. Floats are
// written in shortest round-trip form so identical inputs give identical bytes.

#include "magsteklov/acceptance.hpp"
#include "magsteklov/bounds.hpp"
#include "magsteklov/frustration.hpp"
#include "magsteklov/report.hpp"
#include "magsteklov/spectra_models.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace magsteklov {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

/// Shortest decimal string that parses back to x; "nan", "inf", "-inf" otherwise.
std::string format_double(double x);

/// Finite numbers as numbers, everything else as null.
Json json_number(double x);

std::string csv_spectrum_header();
std::string csv_spectrum_rows(const SpectrumTable& table);

Json json_spectrum_rows(const SpectrumTable& table);
Json json_report(const BoundReport& report);
Json json_check(const CheckResult& check);
Json json_frustration(const FrustrationSpec& spec, const FrustrationResult& result);

std::string csv_reports(const std::vector<BoundReport>& reports);

/// Eigenvalue-against-t polylines, one per mode label, over all tables.
std::string svg_spectrum(const std::vector<SpectrumTable>& tables, const std::string& title);

/// {schema_version, command, config, <payload_key>: payload} serialised with
/// two-space indentation and a trailing newline.
std::string json_document(const std::string& command, const Json& config, const std::string& payload_key,
                          const Json& payload);

} // namespace magsteklov
